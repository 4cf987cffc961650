//! Brute-force common-right-factor search by undetermined coefficients.
//!
//! Shares nothing with the library's search beyond polynomial arithmetic:
//! W's coefficients are solved one at a time from the top coefficients of
//! W^e against P, and the outer factors come from a dense linear solve in the
//! basis 1, W, W², ….

use num_integer::Integer;
use pmcx_core::{Poly, Rational};

/// Solves M·x = v exactly; `None` if inconsistent. Columns are assumed
/// independent.
fn solve(mut rows: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..ncols {
        let Some(r) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, r);
        rhs.swap(pivot_row, r);
        let inv = rows[pivot_row][col].recip().unwrap();
        for c in 0..ncols {
            rows[pivot_row][c] = &rows[pivot_row][c] * &inv;
        }
        rhs[pivot_row] = &rhs[pivot_row] * &inv;
        for r2 in 0..rows.len() {
            if r2 != pivot_row && !rows[r2][col].is_zero() {
                let f = rows[r2][col].clone();
                for c in 0..ncols {
                    let t = &f * &rows[pivot_row][c];
                    rows[r2][c] -= &t;
                }
                let t = &f * &rhs[pivot_row];
                rhs[r2] -= &t;
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if rhs[pivot_row..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rhs[i].clone();
    }
    Some(x)
}

/// Coefficients of F in the basis W^0..W^e, if F lies in their span.
fn outer_by_linear_solve(
    f: &Poly<Rational>,
    w: &Poly<Rational>,
    e: usize,
) -> Option<Poly<Rational>> {
    let n = e * w.deg().unwrap();
    let basis: Vec<Poly<Rational>> = (0..=e).map(|i| w.pow(i as u32)).collect();
    let rows = (0..=n)
        .map(|row| basis.iter().map(|b| b.coeff(row)).collect())
        .collect();
    let rhs = (0..=n).map(|row| f.coeff(row)).collect();
    solve(rows, rhs).map(Poly::new)
}

/// The candidate normalized W of degree d for P, solved coefficient by
/// coefficient from [W^e]_{N−j} = [monic P]_{N−j}, j = 1..d−1.
fn undetermined_w(p: &Poly<Rational>, d: usize) -> Poly<Rational> {
    let n = p.deg().unwrap();
    let e = n / d;
    let lc_inv = p.leading_coeff().unwrap().recip().unwrap();
    let target: Vec<Rational> = p.coeffs().iter().map(|c| c * &lc_inv).collect();
    let mut w = vec![Rational::zero(); d + 1];
    w[d] = Rational::one();
    let e_inv = Rational::new(1, e as i64).unwrap();
    for j in 1..d {
        let partial = Poly::new(w.clone()).pow(e as u32);
        let known = partial.coeff(n - j);
        w[d - j] = &(&target[n - j] - &known) * &e_inv;
    }
    Poly::new(w)
}

/// (d, W, outer_P, outer_Q) for every common divisor d > 1 where a common
/// right factor exists.
pub fn brute_force_common_factors(
    p: &Poly<Rational>,
    q: &Poly<Rational>,
) -> Vec<(usize, Poly<Rational>, Poly<Rational>, Poly<Rational>)> {
    let (Some(dp), Some(dq)) = (p.deg(), q.deg()) else {
        return Vec::new();
    };
    if dp < 2 || dq < 1 {
        return Vec::new();
    }
    let g = dp.gcd(&dq);
    let mut out = Vec::new();
    for d in 2..=g {
        if g % d != 0 {
            continue;
        }
        let w = undetermined_w(p, d);
        let Some(a) = outer_by_linear_solve(p, &w, dp / d) else {
            continue;
        };
        let Some(b) = outer_by_linear_solve(q, &w, dq / d) else {
            continue;
        };
        out.push((d, w, a, b));
    }
    out
}
