/// Physicists' Hermite polynomial H_n(η) by forward recurrence
/// H_{k+1} = 2η H_k − 2k H_{k−1}.
pub fn hermite(n: u32, eta: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * eta;
    for k in 1..n {
        let next = 2.0 * eta * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_orders() {
        assert_eq!(hermite(0, 0.7), 1.0);
        assert!((hermite(1, 0.7) - 1.4).abs() < 1e-15);
        assert_eq!(hermite(2, 0.0), -2.0);
        // H_3 = 8η³ − 12η, H_4 = 16η⁴ − 48η² + 12
        let e: f64 = 1.3;
        assert!((hermite(3, e) - (8.0 * e.powi(3) - 12.0 * e)).abs() < 1e-12);
        assert!((hermite(4, e) - (16.0 * e.powi(4) - 48.0 * e * e + 12.0)).abs() < 1e-12);
    }

    #[test]
    fn recurrence_consistency() {
        for n in 1..=50u32 {
            for step in -6..=6 {
                let eta = step as f64 * 0.5;
                let (hm, h, hp) = (hermite(n - 1, eta), hermite(n, eta), hermite(n + 1, eta));
                let resid = hp - 2.0 * eta * h + 2.0 * n as f64 * hm;
                let scale = hp.abs().max(2.0 * eta.abs() * h.abs()).max(2.0 * n as f64 * hm.abs());
                assert!(resid.abs() <= 1e-10 * scale.max(1e-300), "n={n} eta={eta}");
            }
        }
    }
}
