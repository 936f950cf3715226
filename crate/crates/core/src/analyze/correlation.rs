use statrs::function::beta::beta_reg;

use crate::error::{Error, Result};
use crate::numeric::{compensated_sum, NeumaierSum};

fn check_lengths(xs: &[f64], ys: &[f64]) -> Result<()> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch { left: xs.len(), right: ys.len() });
    }
    if xs.len() < 2 {
        return Err(Error::TooFewObservations { needed: 2, got: xs.len() });
    }
    Ok(())
}

/// Pearson product-moment correlation, mean-centred in two passes and
/// clamped to [-1, 1].
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64> {
    check_lengths(xs, ys)?;
    let n = xs.len() as f64;
    let mx = compensated_sum(xs.iter().copied()) / n;
    let my = compensated_sum(ys.iter().copied()) / n;
    let mut sxx = NeumaierSum::new();
    let mut syy = NeumaierSum::new();
    let mut sxy = NeumaierSum::new();
    for (&x, &y) in xs.iter().zip(ys) {
        let dx = x - mx;
        let dy = y - my;
        sxx.add(dx * dx);
        syy.add(dy * dy);
        sxy.add(dx * dy);
    }
    let (sxx, syy) = (sxx.total(), syy.total());
    if sxx == 0.0 {
        return Err(Error::ConstantInput { label: "first sequence".into() });
    }
    if syy == 0.0 {
        return Err(Error::ConstantInput { label: "second sequence".into() });
    }
    // sqrt of the product keeps r exactly 1 when one input is a scaled copy
    Ok((sxy.total() / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// Ascending ranks starting at 1; tied values share the mean of the ranks
/// they span.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i + 1;
        while j < idx.len() && values[idx[j]] == values[idx[i]] {
            j += 1;
        }
        // positions i..j hold ranks i+1..=j
        let rank = (i + 1 + j) as f64 / 2.0;
        for &k in &idx[i..j] {
            ranks[k] = rank;
        }
        i = j;
    }
    ranks
}

/// Spearman rank correlation: Pearson on tie-averaged ranks.
pub fn spearman(xs: &[f64], ys: &[f64]) -> Result<f64> {
    check_lengths(xs, ys)?;
    pearson(&average_ranks(xs), &average_ranks(ys))
}

/// Two-tailed p-value of a correlation coefficient under the t
/// approximation with `n - 2` degrees of freedom.
pub fn corr_p_value(coef: f64, n: usize) -> Result<f64> {
    if !(-1.0..=1.0).contains(&coef) {
        return Err(Error::InvalidCoefficient(coef));
    }
    if n < 3 {
        return Err(Error::TooFewObservations { needed: 3, got: n });
    }
    if coef.abs() == 1.0 {
        return Ok(0.0);
    }
    let df = (n - 2) as f64;
    let t2 = coef * coef * df / (1.0 - coef * coef);
    // P(|T| > t) = I_{df/(df+t^2)}(df/2, 1/2)
    Ok(beta_reg(df / 2.0, 0.5, df / (df + t2)).clamp(0.0, 1.0))
}
