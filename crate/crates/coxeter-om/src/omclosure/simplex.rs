//! Exact cone-membership via phase-1 simplex over an ordered field, with
//! Bland's least-index anti-cycling rule and zero tolerance. Either way the
//! answer comes with a certificate that re-checks exactly: nonnegative
//! combination coefficients, or a separating functional nonnegative on the
//! generators and negative on the target.

use crate::scalars::{OrderedScalar, Sign};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeCertificate<K: OrderedScalar> {
    /// `x = sum coeffs[i] * generators[i]` with all coefficients `>= 0`.
    Member { coeffs: Vec<K> },
    /// `f` with `<f, g> >= 0` for every generator and `<f, x> < 0`.
    Separated { functional: Vec<K> },
}

impl<K: OrderedScalar> ConeCertificate<K> {
    pub fn is_member(&self) -> bool {
        matches!(self, ConeCertificate::Member { .. })
    }

    /// Re-verify the certificate against the original data.
    pub fn verify(&self, x: &[K], generators: &[Vec<K>]) -> bool {
        match self {
            ConeCertificate::Member { coeffs } => {
                if coeffs.len() != generators.len() {
                    return false;
                }
                if coeffs.iter().any(|c| c.sign() == Sign::Minus) {
                    return false;
                }
                let d = x.len();
                let mut acc = vec![K::zero(); d];
                for (c, g) in coeffs.iter().zip(generators) {
                    for r in 0..d {
                        acc[r] = acc[r].clone() + c.clone() * g[r].clone();
                    }
                }
                acc == x
            }
            ConeCertificate::Separated { functional } => {
                if functional.len() != x.len() {
                    return false;
                }
                let dot = |v: &[K]| -> K {
                    functional
                        .iter()
                        .zip(v)
                        .fold(K::zero(), |acc, (f, a)| acc + f.clone() * a.clone())
                };
                generators.iter().all(|g| dot(g).sign() != Sign::Minus)
                    && dot(x).sign() == Sign::Minus
            }
        }
    }
}

fn field_div<K: OrderedScalar>(a: &K, b: &K) -> K {
    a.exact_div(b).expect("ordered towers are fields")
}

/// Exact nonnegative-combination feasibility: is `x` in `cone(generators)`?
pub fn cone_member<K: OrderedScalar>(x: &[K], generators: &[Vec<K>]) -> ConeCertificate<K> {
    let d = x.len();
    let n = generators.len();
    debug_assert!(generators.iter().all(|g| g.len() == d));
    // orient rows so the right-hand side is nonnegative
    let row_sign: Vec<bool> = x.iter().map(|v| v.sign() != Sign::Minus).collect();
    let orient = |val: K, r: usize| if row_sign[r] { val } else { -val };
    // tableau columns: n generators then d artificials
    let cols = n + d;
    let mut rows: Vec<Vec<K>> = (0..d)
        .map(|r| {
            let mut row: Vec<K> = (0..n)
                .map(|j| orient(generators[j][r].clone(), r))
                .collect();
            row.extend((0..d).map(|k| if k == r { K::one() } else { K::zero() }));
            row
        })
        .collect();
    let mut rhs: Vec<K> = (0..d).map(|r| orient(x[r].clone(), r)).collect();
    let mut basis: Vec<usize> = (0..d).map(|r| n + r).collect();
    // phase-1 objective: minimize the sum of artificials; reduced costs
    // c_bar[j] = c[j] - sum_r rows[r][j] for the artificial basis
    let mut obj: Vec<K> = (0..cols)
        .map(|j| {
            let c_j = if j >= n { K::one() } else { K::zero() };
            let z_j = rows.iter().fold(K::zero(), |acc, row| acc + row[j].clone());
            c_j - z_j
        })
        .collect();
    let mut obj_val: K = rhs.iter().fold(K::zero(), |acc, b| acc + b.clone());

    loop {
        // Bland: least-index column with negative reduced cost
        let Some(enter) = (0..cols).find(|&j| obj[j].sign() == Sign::Minus) else {
            break;
        };
        // ratio test, ties broken by least basis index
        let mut leave: Option<usize> = None;
        for r in 0..d {
            if rows[r][enter].sign() != Sign::Plus {
                continue;
            }
            let better = match leave {
                None => true,
                Some(cur) => {
                    let lhs = rhs[r].clone() * rows[cur][enter].clone();
                    let rhs_v = rhs[cur].clone() * rows[r][enter].clone();
                    match lhs.cmp(&rhs_v) {
                        std::cmp::Ordering::Less => true,
                        std::cmp::Ordering::Equal => basis[r] < basis[cur],
                        std::cmp::Ordering::Greater => false,
                    }
                }
            };
            if better {
                leave = Some(r);
            }
        }
        let leave = leave.expect("phase-1 objective is bounded below");
        // pivot
        let pivot = rows[leave][enter].clone();
        for j in 0..cols {
            rows[leave][j] = field_div(&rows[leave][j], &pivot);
        }
        rhs[leave] = field_div(&rhs[leave], &pivot);
        for r in 0..d {
            if r == leave || rows[r][enter].is_zero() {
                continue;
            }
            let f = rows[r][enter].clone();
            for j in 0..cols {
                rows[r][j] = rows[r][j].clone() - f.clone() * rows[leave][j].clone();
            }
            rhs[r] = rhs[r].clone() - f.clone() * rhs[leave].clone();
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for j in 0..cols {
                obj[j] = obj[j].clone() - f.clone() * rows[leave][j].clone();
            }
            // the entering variable takes value rhs[leave], moving the
            // objective by its reduced cost times that amount
            obj_val = obj_val + f * rhs[leave].clone();
        }
        basis[leave] = enter;
    }

    let cert = if obj_val.is_zero() {
        let mut coeffs = vec![K::zero(); n];
        for (r, &b) in basis.iter().enumerate() {
            if b < n {
                coeffs[b] = rhs[r].clone();
            }
        }
        ConeCertificate::Member { coeffs }
    } else {
        // simplex multipliers from the artificial reduced costs:
        // y_r = 1 - obj[n + r]; then f = -(row-oriented y) separates
        let functional: Vec<K> = (0..d)
            .map(|r| {
                let y = K::one() - obj[n + r].clone();
                let w = if row_sign[r] { y } else { -y };
                -w
            })
            .collect();
        ConeCertificate::Separated { functional }
    };
    assert!(
        cert.verify(x, generators),
        "simplex produced an invalid certificate"
    );
    cert
}
