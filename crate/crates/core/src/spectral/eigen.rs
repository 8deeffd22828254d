//! Dense symmetric eigenvalues: Householder reduction to tridiagonal form
//! followed by implicit QL with Wilkinson-type shifts.

use crate::error::{Error, Result};

const MAX_QL_SWEEPS: usize = 60;

/// Reduces the row-major symmetric matrix `a` in place and returns the
/// diagonal and subdiagonal (`e[0] = 0`, `e[i]` couples rows `i - 1` and `i`).
fn tridiagonalize(a: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    for i in (1..n).rev() {
        let l = i - 1;
        let row = i * n;
        if l > 0 {
            let scale: f64 = a[row..=row + l].iter().map(|x| x.abs()).sum();
            if scale == 0.0 {
                e[i] = a[row + l];
                continue;
            }
            let mut h = 0.0;
            for k in 0..=l {
                a[row + k] /= scale;
                h += a[row + k] * a[row + k];
            }
            let f = a[row + l];
            let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
            e[i] = scale * g;
            h -= f * g;
            a[row + l] = f - g;
            let mut f = 0.0;
            for j in 0..=l {
                // p = A u / h using the lower triangle only
                let mut g = 0.0;
                for k in 0..=j {
                    g += a[j * n + k] * a[row + k];
                }
                for k in (j + 1)..=l {
                    g += a[k * n + j] * a[row + k];
                }
                e[j] = g / h;
                f += e[j] * a[row + j];
            }
            let hh = f / (h + h);
            for j in 0..=l {
                let f = a[row + j];
                let g = e[j] - hh * f;
                e[j] = g;
                for k in 0..=j {
                    a[j * n + k] -= f * e[k] + g * a[row + k];
                }
            }
        } else {
            e[i] = a[row + l];
        }
    }
    for (i, di) in d.iter_mut().enumerate() {
        *di = a[i * n + i];
    }
    (d, e)
}

/// Eigenvalues of a symmetric tridiagonal matrix, in no particular order.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_QL_SWEEPS {
                return Err(Error::Numerical(format!(
                    "QL iteration did not converge for eigenvalue {l}"
                )));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// All eigenvalues of the `n x n` symmetric matrix `a` (row-major; only the
/// lower triangle is read), sorted in increasing order.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    if a.len() != n * n {
        return Err(Error::input(format!(
            "matrix has {} entries, expected {}",
            a.len(),
            n * n
        )));
    }
    if a.iter().any(|x| !x.is_finite()) {
        return Err(Error::input("matrix has non-finite entries"));
    }
    let (mut d, mut e) = tridiagonalize(&mut a, n);
    tridiagonal_ql(&mut d, &mut e)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matrices() {
        assert_eq!(symmetric_eigenvalues(vec![], 0).unwrap(), Vec::<f64>::new());
        assert_eq!(symmetric_eigenvalues(vec![3.0], 1).unwrap(), vec![3.0]);
        let v = symmetric_eigenvalues(vec![2.0, 1.0, 1.0, 2.0], 2).unwrap();
        assert!((v[0] - 1.0).abs() < 1e-14 && (v[1] - 3.0).abs() < 1e-14);
        let v =
            symmetric_eigenvalues(vec![5.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 2.0], 3).unwrap();
        assert_eq!(v, vec![-1.0, 2.0, 5.0]);
    }

    #[test]
    fn trace_and_frobenius_preserved() {
        let n = 12;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let x = ((i * 7 + j * 13) % 11) as f64 - 5.0;
                a[i * n + j] = x;
                a[j * n + i] = x;
            }
        }
        let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
        let frob: f64 = a.iter().map(|x| x * x).sum();
        let v = symmetric_eigenvalues(a, n).unwrap();
        assert!((v.iter().sum::<f64>() - trace).abs() < 1e-10);
        assert!((v.iter().map(|x| x * x).sum::<f64>() - frob).abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(symmetric_eigenvalues(vec![1.0; 3], 2).is_err());
        assert!(symmetric_eigenvalues(vec![f64::NAN], 1).is_err());
    }
}
