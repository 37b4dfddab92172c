use std::fmt;

use num_rational::Ratio;

use super::Polynomial;
use crate::{Error, Integer, Result};

/// One slope of a Newton polygon: the common p-adic valuation of
/// `multiplicity` roots (counted over the algebraic closure).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NewtonSlope {
    pub slope: Ratio<i64>,
    pub multiplicity: usize,
}

impl fmt::Display for NewtonSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{} x{}",
            self.slope.numer(),
            self.slope.denom(),
            self.multiplicity
        )
    }
}

/// p-adic valuation of a nonzero integer.
pub fn p_valuation<T: Integer>(x: &T, p: u64) -> Option<u32> {
    if x.is_zero() {
        return None;
    }
    let p = T::of_u64(p);
    let mut x = x.clone();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        x = q;
        v += 1;
    }
}

/// Valuations of the roots of a monic polynomial, read off the lower convex
/// hull of the points `(i, v_p(c_i))`. Slopes are returned in increasing
/// order with equal slopes merged.
pub fn newton_slopes<T: Integer>(poly: &Polynomial<T>, p: u64) -> Result<Vec<NewtonSlope>> {
    if !poly.is_monic() {
        return Err(Error::NotMonic);
    }
    let coeffs = poly.coeffs();
    if coeffs[0].is_zero() {
        return Err(Error::ZeroRoot);
    }
    let points: Vec<(i64, i64)> = coeffs
        .iter()
        .enumerate()
        .filter_map(|(i, c)| p_valuation(c, p).map(|v| (i as i64, v as i64)))
        .collect();

    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &pt in &points {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // drop b unless it lies strictly below segment a→pt
            let cross = (b.0 - a.0) * (pt.1 - a.1) - (b.1 - a.1) * (pt.0 - a.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }

    let mut slopes: Vec<NewtonSlope> = hull
        .windows(2)
        .map(|w| {
            let (dx, dy) = (w[1].0 - w[0].0, w[0].1 - w[1].1);
            NewtonSlope {
                slope: Ratio::new(dy, dx),
                multiplicity: dx as usize,
            }
        })
        .collect();
    slopes.sort();
    let mut merged: Vec<NewtonSlope> = Vec::new();
    for s in slopes {
        match merged.last_mut() {
            Some(last) if last.slope == s.slope => last.multiplicity += s.multiplicity,
            _ => merged.push(s),
        }
    }
    Ok(merged)
}
