//! Small exact linear algebra over the scalar towers: fraction-free
//! determinants and rank-2 solves. Matrices are `Vec<Vec<K>>` in row-major
//! order; everything here stays exact, divisions are certified by
//! [`Scalar::exact_div`].



use crate::scalars::Scalar;

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Every division is exact over an integral domain, so the result is exact
/// in any tower, including the Laurent ring.
pub fn bareiss_det<K: Scalar>(m: &[Vec<K>]) -> K {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "square matrix required");
    if n == 0 {
        return K::one();
    }
    let mut a: Vec<Vec<K>> = m.to_vec();
    let mut sign_flip = false;
    let mut prev = K::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return K::zero();
            };
            a.swap(k, p);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].clone() * a[i][j].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss divisions are exact over an integral domain");
            }
            a[i][k] = K::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Matrix of the linear map sending basis vector `j` to `cols[j]`.
pub fn det_of_columns<K: Scalar>(cols: &[Vec<K>]) -> K {
    let n = cols.len();
    assert!(cols.iter().all(|c| c.len() == n));
    let rows: Vec<Vec<K>> = (0..n)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    bareiss_det(&rows)
}

/// Solve `p*a + q*b = x` exactly for column vectors of equal length with
/// `a, b` linearly independent. Returns `None` when the system is
/// inconsistent or the solution escapes the tower.
pub fn solve_rank2<K: Scalar>(a: &[K], b: &[K], x: &[K]) -> Option<(K, K)> {
    let d = a.len();
    assert_eq!(b.len(), d);
    assert_eq!(x.len(), d);
    // find an invertible 2x2 row pair of [a b]
    let mut pivot = None;
    'outer: for r in 0..d {
        for s in r + 1..d {
            let det = a[r].clone() * b[s].clone() - a[s].clone() * b[r].clone();
            if !det.is_zero() {
                pivot = Some((r, s, det));
                break 'outer;
            }
        }
    }
    let (r, s, det) = pivot?;
    let p_num = x[r].clone() * b[s].clone() - x[s].clone() * b[r].clone();
    let q_num = a[r].clone() * x[s].clone() - a[s].clone() * x[r].clone();
    let p = p_num.exact_div(&det)?;
    let q = q_num.exact_div(&det)?;
    for i in 0..d {
        let lhs = p.clone() * a[i].clone() + q.clone() * b[i].clone();
        if lhs != x[i] {
            return None;
        }
    }
    Some((p, q))
}

/// `true` iff the given vectors span a subspace of dimension at most 2,
/// decided by vanishing of all 3x3 minors.
pub fn rank_at_most_two<K: Scalar>(vecs: &[Vec<K>]) -> bool {
    let m = vecs.len();
    if m <= 2 {
        return true;
    }
    let d = vecs[0].len();
    // it suffices to test triples containing two fixed independent vectors,
    // but the counts here are tiny; test all triples for clarity
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for r in 0..d {
                    for s in r + 1..d {
                        for t in s + 1..d {
                            let det = minor3(&vecs[a], &vecs[b], &vecs[c], r, s, t);
                            if !det.is_zero() {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

fn minor3<K: Scalar>(u: &[K], v: &[K], w: &[K], r: usize, s: usize, t: usize) -> K {
    let m = [
        [u[r].clone(), v[r].clone(), w[r].clone()],
        [u[s].clone(), v[s].clone(), w[s].clone()],
        [u[t].clone(), v[t].clone(), w[t].clone()],
    ];
    m[0][0].clone() * (m[1][1].clone() * m[2][2].clone() - m[1][2].clone() * m[2][1].clone())
        - m[0][1].clone() * (m[1][0].clone() * m[2][2].clone() - m[1][2].clone() * m[2][0].clone())
        + m[0][2].clone() * (m[1][0].clone() * m[2][1].clone() - m[1][1].clone() * m[2][0].clone())
}

/// `true` iff `x` is a scalar multiple of `y` (over the fraction field),
/// decided by cross-multiplication.
pub fn proportional<K: Scalar>(x: &[K], y: &[K]) -> bool {
    assert_eq!(x.len(), y.len());
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            if x[i].clone() * y[j].clone() != x[j].clone() * y[i].clone() {
                return false;
            }
        }
    }
    // zero pattern must also agree
    x.iter().zip(y).all(|(a, b)| a.is_zero() == b.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{gauss_c, LaurentPoly, Rational};

    fn rq(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = vec![
            vec![rq(2), rq(-1), rq(0)],
            vec![rq(-1), rq(2), rq(-1)],
            vec![rq(0), rq(-1), rq(2)],
        ];
        assert_eq!(bareiss_det(&m), rq(4));
        let singular = vec![vec![rq(1), rq(2)], vec![rq(2), rq(4)]];
        assert_eq!(bareiss_det(&singular), rq(0));
    }

    #[test]
    fn bareiss_over_laurent() {
        // det [[c2, 1], [1, c2]] = c2^2 - 1 = c3 (Gauss identity at n=m=1)
        let m = vec![
            vec![gauss_c(2), LaurentPoly::from_int(1)],
            vec![LaurentPoly::from_int(1), gauss_c(2)],
        ];
        assert_eq!(bareiss_det(&m), gauss_c(3));
    }

    #[test]
    fn rank2_solve() {
        let a = vec![rq(1), rq(0), rq(1)];
        let b = vec![rq(0), rq(1), rq(1)];
        let x = vec![rq(2), rq(3), rq(5)];
        assert_eq!(solve_rank2(&a, &b, &x), Some((rq(2), rq(3))));
        let y = vec![rq(2), rq(3), rq(4)];
        assert_eq!(solve_rank2(&a, &b, &y), None);
    }

    #[test]
    fn proportionality() {
        let x = vec![rq(2), rq(4), rq(0)];
        let y = vec![rq(3), rq(6), rq(0)];
        assert!(proportional(&x, &y));
        let z = vec![rq(3), rq(6), rq(1)];
        assert!(!proportional(&x, &z));
    }
}
