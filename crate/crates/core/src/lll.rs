//! LLL lattice basis reduction with delta = 3/4 in exact arithmetic.
//!
//! The reducer is the classical all-integer formulation: the Gram-Schmidt
//! data is carried as lambda_ij = d_j * mu_ij and d_j = det Gram(b_1..b_j),
//! all integers, so no rational normalization is ever needed. This is the
//! exact rational Gram-Schmidt in scaled form; no floating point anywhere.

use crate::error::{Error, Result};
use crate::rational::{Int, Rat};
use num_traits::{One, Signed, Zero};

fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

struct State {
    basis: Vec<Vec<Int>>,
    /// lambda[i][j] = d[j+1] * mu_ij, for j < i
    lambda: Vec<Vec<Int>>,
    /// d[0] = 1, d[i+1] = det Gram(basis[0..=i]); all positive
    d: Vec<Int>,
}

impl State {
    fn init(basis: Vec<Vec<Int>>) -> Result<State> {
        let n = basis.len();
        let mut lambda: Vec<Vec<Int>> = (0..n).map(|i| vec![Int::zero(); i]).collect();
        let mut d: Vec<Int> = vec![Int::one(); n + 1];
        for i in 0..n {
            for j in 0..=i {
                let mut u = dot(&basis[i], &basis[j]);
                for l in 0..j {
                    u = (&d[l + 1] * &u - &lambda[i][l] * &lambda[j][l]) / &d[l];
                }
                if j < i {
                    lambda[i][j] = u;
                } else {
                    if !u.is_positive() {
                        return Err(Error::DependentRows);
                    }
                    d[i + 1] = u;
                }
            }
        }
        Ok(State { basis, lambda, d })
    }

    /// Size-reduce basis[k] against basis[l] (l < k).
    fn red(&mut self, k: usize, l: usize) {
        let two_lam = Int::from(2) * self.lambda[k][l].abs();
        if two_lam <= self.d[l + 1] {
            return;
        }
        // q = nearest integer to lambda / d
        let q = Rat::new(self.lambda[k][l].clone(), self.d[l + 1].clone())
            .round()
            .to_integer();
        for c in 0..self.basis[k].len() {
            let t = &q * &self.basis[l][c];
            self.basis[k][c] -= t;
        }
        for j in 0..l {
            let t = &q * &self.lambda[l][j];
            self.lambda[k][j] -= t;
        }
        let t = &q * &self.d[l + 1];
        self.lambda[k][l] -= t;
    }

    /// True iff the Lovasz condition fails between rows k-1 and k.
    fn must_swap(&self, k: usize) -> bool {
        let lam = &self.lambda[k][k - 1];
        Int::from(4) * (&self.d[k + 1] * &self.d[k - 1] + lam * lam)
            < Int::from(3) * &self.d[k] * &self.d[k]
    }

    /// Swap rows k-1 and k, updating lambda and d exactly.
    fn swap(&mut self, k: usize) {
        self.basis.swap(k, k - 1);
        for j in 0..k - 1 {
            let t = self.lambda[k][j].clone();
            self.lambda[k][j] = self.lambda[k - 1][j].clone();
            self.lambda[k - 1][j] = t;
        }
        let lam = self.lambda[k][k - 1].clone();
        let d_new = (&self.d[k - 1] * &self.d[k + 1] + &lam * &lam) / &self.d[k];
        for i in k + 1..self.basis.len() {
            let t = self.lambda[i][k].clone();
            self.lambda[i][k] = (&self.d[k + 1] * &self.lambda[i][k - 1] - &lam * &t) / &self.d[k];
            self.lambda[i][k - 1] =
                (&d_new * &t + &lam * &self.lambda[i][k]) / &self.d[k + 1];
        }
        self.d[k] = d_new;
    }
}

/// LLL-reduces a linearly independent set of integer row vectors; the
/// output spans the same lattice. delta = 3/4.
pub fn lll_reduce(basis: &[Vec<Int>]) -> Result<Vec<Vec<Int>>> {
    if basis.is_empty() {
        return Err(Error::EmptyInput);
    }
    let cols = basis[0].len();
    if basis.iter().any(|v| v.len() != cols) {
        return Err(Error::ShapeMismatch);
    }
    let n = basis.len();
    let mut st = State::init(basis.to_vec())?;
    let mut k = 1usize;
    while k < n {
        st.red(k, k - 1);
        if st.must_swap(k) {
            st.swap(k);
            k = k.saturating_sub(1).max(1);
        } else {
            for l in (0..k.saturating_sub(1)).rev() {
                st.red(k, l);
            }
            k += 1;
        }
    }
    debug_assert!(is_lll_reduced(&st.basis).unwrap_or(false));
    Ok(st.basis)
}

/// Checks the size-reduction and Lovasz conditions via a from-scratch
/// rational Gram-Schmidt pass (exact).
pub fn is_lll_reduced(basis: &[Vec<Int>]) -> Result<bool> {
    let (mu, b_star) = rational_gram_schmidt(basis)?;
    let half = Rat::new(Int::from(1), Int::from(2));
    let delta = Rat::new(Int::from(3), Int::from(4));
    for i in 0..basis.len() {
        for j in 0..i {
            if mu[i][j].abs() > half {
                return Ok(false);
            }
        }
    }
    for k in 1..basis.len() {
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &b_star[k - 1];
        if b_star[k] < rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact rational Gram-Schmidt data (mu, squared star norms); errors on
/// dependent rows.
pub fn rational_gram_schmidt(basis: &[Vec<Int>]) -> Result<(Vec<Vec<Rat>>, Vec<Rat>)> {
    let n = basis.len();
    let mut mu: Vec<Vec<Rat>> = vec![Vec::new(); n];
    let mut b_star: Vec<Rat> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(i);
        for j in 0..i {
            let mut acc = Rat::from_integer(dot(&basis[i], &basis[j]));
            for l in 0..j {
                acc -= &row[l] * &mu[j][l] * &b_star[l];
            }
            row.push(acc / &b_star[j]);
        }
        let mut norm = Rat::from_integer(dot(&basis[i], &basis[i]));
        for l in 0..i {
            norm -= &row[l] * &row[l] * &b_star[l];
        }
        if norm.is_zero() {
            return Err(Error::DependentRows);
        }
        mu[i] = row;
        b_star.push(norm);
    }
    Ok((mu, b_star))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::hnf;
    use crate::rational::{int, pow10};
    use rand::{Rng, SeedableRng};

    fn vi(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| Int::from(x)).collect()
    }

    /// Straightforward rational-arithmetic LLL used as a reference
    /// implementation to cross-check the all-integer reducer.
    fn reference_lll(basis: &[Vec<Int>]) -> Result<Vec<Vec<Int>>> {
        let mut b: Vec<Vec<Int>> = basis.to_vec();
        let n = b.len();
        let (mut mu, mut b_star) = rational_gram_schmidt(&b)?;
        if n == 1 {
            return Ok(b);
        }
        let half = Rat::new(Int::from(1), Int::from(2));
        let delta = Rat::new(Int::from(3), Int::from(4));
        let mut k = 1usize;
        while k < n {
            for j in (0..k).rev() {
                if mu[k][j].abs() > half {
                    let q = mu[k][j].round().to_integer();
                    let qr = Rat::from_integer(q.clone());
                    for c in 0..b[k].len() {
                        let t = &q * &b[j][c];
                        b[k][c] -= t;
                    }
                    for l in 0..j {
                        let t = &qr * &mu[j][l];
                        mu[k][l] -= t;
                    }
                    mu[k][j] -= qr;
                }
            }
            let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &b_star[k - 1];
            if b_star[k] >= rhs {
                k += 1;
            } else {
                b.swap(k, k - 1);
                let gs = rational_gram_schmidt(&b)?;
                mu = gs.0;
                b_star = gs.1;
                k = k.saturating_sub(1).max(1);
            }
        }
        Ok(b)
    }

    #[test]
    fn identity_is_fixed() {
        let id = vec![vi(&[1, 0]), vi(&[0, 1])];
        assert_eq!(lll_reduce(&id).unwrap(), id);
    }

    #[test]
    fn rejects_dependent_and_empty() {
        assert_eq!(lll_reduce(&[]), Err(Error::EmptyInput));
        assert_eq!(
            lll_reduce(&[vi(&[1, 2]), vi(&[2, 4])]),
            Err(Error::DependentRows)
        );
        assert_eq!(
            lll_reduce(&[vi(&[1, 2]), vi(&[3])]),
            Err(Error::ShapeMismatch)
        );
    }

    #[test]
    fn first_vector_is_shortest_in_dimension_two() {
        let basis = vec![vi(&[12, 2]), vi(&[13, 4])];
        let red = lll_reduce(&basis).unwrap();
        // brute-force shortest nonzero vector over coefficients in [-20, 20]^2
        let mut best: Option<Int> = None;
        for c1 in -20i64..=20 {
            for c2 in -20i64..=20 {
                if c1 == 0 && c2 == 0 {
                    continue;
                }
                let v: Vec<Int> = (0..2)
                    .map(|k| Int::from(c1) * &basis[0][k] + Int::from(c2) * &basis[1][k])
                    .collect();
                let norm = dot(&v, &v);
                if best.as_ref().is_none_or(|b| norm < *b) {
                    best = Some(norm);
                }
            }
        }
        let first_norm = dot(&red[0], &red[0]);
        assert_eq!(first_norm, best.unwrap());
    }

    #[test]
    fn output_spans_same_lattice_and_matches_reference() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let n = rng.gen_range(2..=4);
            let basis: Vec<Vec<Int>> = (0..n)
                .map(|_| (0..n).map(|_| Int::from(rng.gen_range(-30i64..=30))).collect())
                .collect();
            let Ok(red) = lll_reduce(&basis) else {
                continue; // dependent sample
            };
            assert_eq!(hnf(&basis).unwrap(), hnf(&red).unwrap());
            assert!(is_lll_reduced(&red).unwrap());
            assert_eq!(red, reference_lll(&basis).unwrap());
        }
    }

    #[test]
    fn matches_reference_on_relation_style_lattices() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..20 {
            let n = rng.gen_range(2..=5);
            let mut rows = Vec::with_capacity(n);
            for i in 0..n {
                let mut row = vec![Int::zero(); n + 1];
                row[i] = Int::one();
                row[n] = Int::from(rng.gen_range(-1_000_000_000i64..=1_000_000_000));
                rows.push(row);
            }
            let red = lll_reduce(&rows).unwrap();
            assert_eq!(red, reference_lll(&rows).unwrap());
            assert!(is_lll_reduced(&red).unwrap());
        }
    }

    #[test]
    fn relation_lattice_exposes_integer_relation() {
        // x = sqrt(2) to 20 digits; relation lattice over (1, x, x^2)
        // must expose the relation (-2, 0, 1), i.e. x^2 - 2 = 0.
        let n = pow10(20);
        let x = crate::rational::parse_decimal("1.41421356237309504880").unwrap();
        let scaled = |p: &Rat| -> Int { (p * Rat::from_integer(n.clone())).round().to_integer() };
        let x0 = Rat::from_integer(int(1));
        let x1 = x.clone();
        let x2 = &x * &x;
        let rows = vec![
            vec![int(1), int(0), int(0), scaled(&x0)],
            vec![int(0), int(1), int(0), scaled(&x1)],
            vec![int(0), int(0), int(1), scaled(&x2)],
        ];
        let red = lll_reduce(&rows).unwrap();
        let found = red.iter().any(|v| {
            v[0] == int(-2) && v[1] == int(0) && v[2] == int(1)
                || v[0] == int(2) && v[1] == int(0) && v[2] == int(-1)
        });
        assert!(found, "relation not exposed: {red:?}");
    }
}
