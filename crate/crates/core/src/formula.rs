//! The threshold `f(r)` and the closed-form partition number of `K_n`.

use serde::{Deserialize, Serialize};

use crate::coloring::choose2;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaResult {
    pub n: usize,
    pub r: usize,
    /// `f(r)`; `None` when `r < 2`.
    pub t: Option<usize>,
    pub value: usize,
}

/// The unique `t >= 1` with `C(t,2) + 2 <= r <= C(t+1,2) + 1`.
pub fn f_of_r(r: usize) -> Result<usize> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!("f(r) needs r >= 2, got {r}")));
    }
    // Largest t with C(t,2) <= r - 2: t = floor((1 + sqrt(1 + 8m)) / 2).
    let m = (r - 2) as f64;
    let mut t = ((1.0 + (1.0 + 8.0 * m).sqrt()) / 2.0).floor() as usize;
    t = t.max(1);
    while choose2(t) + 2 > r {
        t -= 1;
    }
    while choose2(t + 1) + 2 <= r {
        t += 1;
    }
    Ok(t)
}

/// Inclusive range of `r` with `f(r) = t`.
pub fn r_range_for_t(t: usize) -> Result<(usize, usize)> {
    if t < 1 {
        return Err(Error::InvalidArgument("t must be at least 1".into()));
    }
    Ok((choose2(t) + 2, choose2(t + 1) + 1))
}

/// Predicted heterochromatic tree partition number of an `r`-edge-colored `K_n`.
pub fn partition_number(n: usize, r: usize) -> Result<usize> {
    Ok(evaluate(n, r)?.value)
}

pub fn evaluate(n: usize, r: usize) -> Result<FormulaResult> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if r > choose2(n) {
        return Err(Error::InvalidArgument(format!(
            "no {r}-edge-coloring of K_{n} exists (only {} edges)",
            choose2(n)
        )));
    }
    if r == 0 && n > 1 {
        return Err(Error::InvalidArgument(format!("K_{n} needs at least one color")));
    }
    let (t, value) = match r {
        0 => (None, 1),
        1 => (None, n.div_ceil(2)),
        _ => {
            let t = f_of_r(r)?;
            (Some(t), (n - t).div_ceil(2))
        }
    };
    Ok(FormulaResult { n, r, t, value })
}
