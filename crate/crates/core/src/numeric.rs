//! Compensated summation and fixed-precision number formatting.
//!
//! Every reduction in the crate goes through [`NeumaierSum`] in a fixed
//! element order, so results are reproducible regardless of how the
//! surrounding work was scheduled.

/// Neumaier (improved Kahan-Babuska) running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl Extend<f64> for NeumaierSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for v in iter {
            self.add(v);
        }
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = NeumaierSum::new();
        s.extend(iter);
        s
    }
}

pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    values.into_iter().collect::<NeumaierSum>().total()
}

/// Mean of `values` with a second correction pass over the residuals.
///
/// For a constant sequence the result equals the constant exactly.
pub fn two_pass_mean(values: &[f64]) -> f64 {
    assert!(!values.is_empty(), "mean of empty slice");
    let n = values.len() as f64;
    let first = compensated_sum(values.iter().copied()) / n;
    let correction = compensated_sum(values.iter().map(|&v| v - first)) / n;
    first + correction
}

/// Population (divide-by-N) standard deviation around a precomputed mean.
pub fn population_sd(values: &[f64], mean: f64) -> f64 {
    assert!(!values.is_empty(), "sd of empty slice");
    let n = values.len() as f64;
    let mut sq = NeumaierSum::new();
    let mut lin = NeumaierSum::new();
    for &v in values {
        let d = v - mean;
        sq.add(d * d);
        lin.add(d);
    }
    // Corrected two-pass: subtract the residual bias of an inexact mean.
    let lin = lin.total();
    let var = (sq.total() - lin * lin / n) / n;
    var.max(0.0).sqrt()
}

/// Formats `x` with `digits` significant digits, `%g` style: fixed notation
/// for moderate exponents, scientific otherwise, trailing zeros trimmed.
pub fn format_sig(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "NaN".to_string()
        } else if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let mantissa = trim_zeros(mantissa);
        format!("{mantissa}e{exp}")
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

/// Formats `x` in scientific notation with `digits` significant digits.
pub fn format_sci(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    format!("{:.*e}", digits - 1, x)
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Output precision used by every exported table.
pub const SIG_DIGITS: usize = 9;

pub fn fmt9(x: f64) -> String {
    format_sig(x, SIG_DIGITS)
}

/// Prime factorization of a product of positive integers, kept as
/// exponents so that equal products compare equal whatever the factors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactoredProduct(std::collections::BTreeMap<u64, u64>);

impl FactoredProduct {
    pub fn new() -> Self {
        Self::default()
    }

    /// Multiplies the product by `x` (`x = 0` is ignored).
    pub fn mul(&mut self, mut x: u64) {
        if x == 0 {
            return;
        }
        let mut bump = |p: u64| *self.0.entry(p).or_insert(0) += 1;
        while x.is_multiple_of(2) {
            bump(2);
            x /= 2;
        }
        let mut p = 3;
        while p * p <= x {
            while x.is_multiple_of(p) {
                bump(p);
                x /= p;
            }
            p += 2;
        }
        if x > 1 {
            bump(x);
        }
    }

    /// `ln` of the product as a compensated sum of `e * ln(p)` in ascending
    /// prime order: a function of the product alone.
    pub fn ln(&self) -> f64 {
        self.0.iter().map(|(&p, &e)| e as f64 * (p as f64).ln()).collect::<NeumaierSum>().total()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neumaier_recovers_cancelled_terms() {
        let s = compensated_sum([1.0, 1e100, 1.0, -1e100]);
        assert_eq!(s, 2.0);
        let naive: f64 = [1.0, 1e100, 1.0, -1e100].iter().sum();
        assert_eq!(naive, 0.0);
    }

    #[test]
    fn two_pass_mean_of_constant_is_exact() {
        let c = 8f64.ln();
        for n in 1..200 {
            let v = vec![c; n];
            assert_eq!(two_pass_mean(&v), c, "n = {n}");
            assert_eq!(population_sd(&v, two_pass_mean(&v)), 0.0);
        }
    }

    #[test]
    fn population_sd_divides_by_n() {
        let v = [2.0, 4.0, 6.0];
        let sd = population_sd(&v, two_pass_mean(&v));
        assert!((sd - (8.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn format_sig_matches_printf_g() {
        assert_eq!(format_sig(1.0, 9), "1");
        assert_eq!(format_sig(1.0 / 3.0, 9), "0.333333333");
        assert_eq!(format_sig(3128.14, 9), "3128.14");
        assert_eq!(format_sig(-1.224744871391589, 9), "-1.22474487");
        assert_eq!(format_sig(123456789012.0, 9), "1.23456789e11");
        assert_eq!(format_sig(0.000012345, 9), "1.2345e-5");
        assert_eq!(format_sig(0.00012345, 9), "0.00012345");
        assert_eq!(format_sig(999999999.6, 9), "1e9");
        assert_eq!(format_sig(0.0, 9), "0");
    }

    #[test]
    fn format_sci_keeps_digits() {
        assert_eq!(format_sci(0.027, 9), "2.70000000e-2");
    }

    #[test]
    fn equal_products_have_equal_logs() {
        let mut a = FactoredProduct::new();
        let mut b = FactoredProduct::new();
        for x in [2, 6, 35, 1, 97] {
            a.mul(x);
        }
        for x in [3, 4, 97, 5, 7] {
            b.mul(x);
        }
        assert_eq!(a, b);
        assert_eq!(a.ln().to_bits(), b.ln().to_bits());
        assert!((a.ln() - (2.0f64 * 6.0 * 35.0 * 97.0).ln()).abs() < 1e-13);
        // naive per-term sums need not agree bitwise
        let naive = |xs: &[f64]| xs.iter().map(|x| x.ln()).sum::<f64>();
        let _ = (naive(&[2.0, 6.0]), naive(&[3.0, 4.0]));
    }

    #[test]
    fn factoring_edge_cases() {
        let mut f = FactoredProduct::new();
        f.mul(1);
        f.mul(0);
        assert_eq!(f.ln(), 0.0);
        f.mul(1_000_003); // prime
        f.mul(1 << 40);
        assert!((f.ln() - (1_000_003f64.ln() + 40.0 * 2f64.ln())).abs() < 1e-12);
    }
}
