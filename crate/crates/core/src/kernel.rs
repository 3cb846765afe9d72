//! Sign-sum kernels.
//!
//! Every polarization-type identity reduces to
//!
//! ```text
//! S = sum over e in {+-1}^k of  e_1 ... e_k * f(x0 + e_1 v_1 + ... + e_k v_k)
//! ```
//!
//! for some base point `x0`, direction list `v_1..v_k` and evaluation `f`.
//! [`signed_sum`] walks the signs in Gray-code order and updates the
//! argument by `+-2 v_k` per step; [`signed_sum_naive`] rebuilds it from
//! scratch; [`signed_sum_partitioned`] splits the walk into independent
//! ranges and reduces them on the rayon pool. All three return the same
//! exact value.

use rayon::prelude::*;

use crate::combinatorics::{check_sign_budget, enumerate_sign_vectors};
use crate::error::Result;
use crate::scalar::{int, Vector};

fn accumulate(total: &mut Option<Vector>, value: Vector, positive: bool) {
    match total {
        Some(acc) if positive => acc.add_assign(&value),
        Some(acc) => acc.sub_assign(&value),
        None if positive => *total = Some(value),
        None => {
            let mut v = Vector::zeros(value.dim());
            v.sub_assign(&value);
            *total = Some(v);
        }
    }
}

/// Gray walk over the low `k` signs, with the signs above `k` already folded
/// into `start` and into `sign`.
fn gray_walk<F>(mut point: Vector, directions: &[Vector], mut positive: bool, f: &F) -> Option<Vector>
where
    F: Fn(&Vector) -> Vector,
{
    let doubled: Vec<Vector> = directions.iter().map(|v| v.scaled(&int(2))).collect();
    let mut signs = vec![true; directions.len()];
    let mut total = None;
    let steps = 1u64 << directions.len();
    for step in 0..steps {
        if step > 0 {
            let k = step.trailing_zeros() as usize;
            if signs[k] {
                point.sub_assign(&doubled[k]);
            } else {
                point.add_assign(&doubled[k]);
            }
            signs[k] = !signs[k];
            positive = !positive;
        }
        accumulate(&mut total, f(&point), positive);
    }
    total
}

fn start_point(x0: &Vector, directions: &[Vector]) -> Vector {
    let mut point = x0.clone();
    for v in directions {
        point.add_assign(v);
    }
    point
}

/// Gray-code incremental sign sum (`O(dim)` argument update per term).
pub fn signed_sum<F>(x0: &Vector, directions: &[Vector], f: F) -> Result<Vector>
where
    F: Fn(&Vector) -> Vector,
{
    check_sign_budget(directions.len())?;
    let total = gray_walk(start_point(x0, directions), directions, true, &f);
    Ok(total.expect("at least two terms"))
}

/// Reference sign sum that recomputes every argument from scratch.
pub fn signed_sum_naive<F>(x0: &Vector, directions: &[Vector], f: F) -> Result<Vector>
where
    F: Fn(&Vector) -> Vector,
{
    let mut total = None;
    for signs in enumerate_sign_vectors(directions.len())? {
        let mut point = x0.clone();
        for (k, v) in directions.iter().enumerate() {
            if signs.get(k) > 0 {
                point.add_assign(v);
            } else {
                point.sub_assign(v);
            }
        }
        accumulate(&mut total, f(&point), signs.product() > 0);
    }
    Ok(total.expect("at least two terms"))
}

/// Sign sum split over `2^split_bits` disjoint ranges reduced in parallel.
///
/// The top `split_bits` signs are fixed per range and the rest are walked
/// in Gray order. Rational addition is exact, so the result does not depend
/// on the reduction order.
pub fn signed_sum_partitioned<F>(
    x0: &Vector,
    directions: &[Vector],
    split_bits: usize,
    f: F,
) -> Result<Vector>
where
    F: Fn(&Vector) -> Vector + Sync,
{
    check_sign_budget(directions.len())?;
    let split_bits = split_bits.min(directions.len().saturating_sub(1));
    let low = directions.len() - split_bits;
    let (walked, fixed) = directions.split_at(low);
    let partials: Vec<Vector> = (0..1u64 << split_bits)
        .into_par_iter()
        .map(|code| {
            let mut base = x0.clone();
            let mut positive = true;
            for (bit, v) in fixed.iter().enumerate() {
                if code >> bit & 1 == 0 {
                    base.add_assign(v);
                } else {
                    base.sub_assign(v);
                    positive = !positive;
                }
            }
            gray_walk(start_point(&base, walked), walked, positive, &f).expect("nonempty range")
        })
        .collect();
    let mut iter = partials.into_iter();
    let mut total = iter.next().expect("at least one range");
    for part in iter {
        total.add_assign(&part);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn cube_first(v: &Vector) -> Vector {
        Vector(vec![&v[0] * &v[0] * &v[0], v[1].clone()])
    }

    #[test]
    fn kernels_agree() {
        let x0 = Vector(vec![ratio(1, 3), int(2)]);
        let dirs = vec![
            Vector::from_ints(&[1, 0]),
            Vector(vec![ratio(-2, 5), int(1)]),
            Vector::from_ints(&[3, -1]),
            Vector::from_ints(&[0, 7]),
        ];
        let gray = signed_sum(&x0, &dirs, cube_first).unwrap();
        let naive = signed_sum_naive(&x0, &dirs, cube_first).unwrap();
        let split = signed_sum_partitioned(&x0, &dirs, 2, cube_first).unwrap();
        assert_eq!(gray, naive);
        assert_eq!(gray, split);
    }

    #[test]
    fn classical_bilinear_polarization() {
        // sum e1 e2 (e1 a + e2 b)^2 = 8ab
        let dirs = vec![Vector::from_ints(&[3]), Vector::from_ints(&[5])];
        let square = |v: &Vector| Vector(vec![&v[0] * &v[0]]);
        let s = signed_sum(&Vector::zeros(1), &dirs, square).unwrap();
        assert_eq!(s, Vector::from_ints(&[120]));
    }

    #[test]
    fn counts_every_term_once() {
        let dirs = vec![Vector::from_ints(&[1]); 4];
        let ones = |_: &Vector| Vector::from_ints(&[1]);
        // sum of e_1...e_4 over all signs is zero
        assert_eq!(signed_sum(&Vector::zeros(1), &dirs, ones).unwrap(), Vector::from_ints(&[0]));
    }
}
