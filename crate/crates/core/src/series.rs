//! Exact truncated power series and the Bessel-determinant formulas for
//! tableaux and Weyl chamber walks.
//!
//! A [`TruncatedEGF`] stores the ordinary coefficients `c_n` of `Σ c_n x^n`
//! for `n <= order`; for an exponential generating function `c_n = a_n / n!`.

use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::walks::Point;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedEGF {
    coeffs: Vec<BigRational>,
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

impl TruncatedEGF {
    pub fn zero(order: usize) -> Self {
        TruncatedEGF {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Truncates or zero-pads `coeffs` to `order`.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        TruncatedEGF { coeffs }
    }

    /// `Σ a_n x^n / n!`.
    pub fn from_egf_counts(counts: &[BigInt], order: usize) -> Self {
        let coeffs = counts
            .iter()
            .enumerate()
            .map(|(n, a)| BigRational::new(a.clone(), factorial(n)))
            .collect();
        Self::from_coeffs(coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `e^x`.
    pub fn exp(order: usize) -> Self {
        TruncatedEGF {
            coeffs: (0..=order)
                .map(|n| BigRational::new(BigInt::one(), factorial(n)))
                .collect(),
        }
    }

    /// `I_m(2x) = Σ_i x^{m+2i} / ((m+i)! i!)`, terms with a negative
    /// factorial argument dropped.
    pub fn bessel(m: i64, order: usize) -> Self {
        let mut s = Self::zero(order);
        for i in 0.. {
            let power = m + 2 * i;
            if power > order as i64 {
                break;
            }
            if m + i < 0 || power < 0 {
                continue;
            }
            s.coeffs[power as usize] =
                BigRational::new(BigInt::one(), factorial((m + i) as usize) * factorial(i as usize));
        }
        s
    }

    /// `n! c_n`, the counted sequence of an exponential generating function.
    pub fn egf_counts(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c * BigRational::from_integer(factorial(n)))
            .collect()
    }

    /// The counts as integers, `None` if some count is not integral.
    pub fn egf_integers(&self) -> Option<Vec<BigInt>> {
        self.egf_counts()
            .into_iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        TruncatedEGF {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }
}

impl Add for &TruncatedEGF {
    type Output = TruncatedEGF;

    fn add(self, rhs: &TruncatedEGF) -> TruncatedEGF {
        let order = self.order().min(rhs.order());
        TruncatedEGF {
            coeffs: (0..=order).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect(),
        }
    }
}

impl Sub for &TruncatedEGF {
    type Output = TruncatedEGF;

    fn sub(self, rhs: &TruncatedEGF) -> TruncatedEGF {
        let order = self.order().min(rhs.order());
        TruncatedEGF {
            coeffs: (0..=order).map(|n| &self.coeffs[n] - &rhs.coeffs[n]).collect(),
        }
    }
}

impl Neg for &TruncatedEGF {
    type Output = TruncatedEGF;

    fn neg(self) -> TruncatedEGF {
        TruncatedEGF {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedEGF {
    type Output = TruncatedEGF;

    fn mul(self, rhs: &TruncatedEGF) -> TruncatedEGF {
        let order = self.order().min(rhs.order());
        let mut out = TruncatedEGF::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

/// Determinant of a square matrix of series, by Laplace expansion along
/// rows with memoised minors.
pub fn series_det(m: &[Vec<TruncatedEGF>], order: usize) -> TruncatedEGF {
    let k = m.len();
    assert!(m.iter().all(|r| r.len() == k), "square matrix expected");
    assert!(k < 20, "determinant too large for minor expansion");
    let mut memo: HashMap<u32, TruncatedEGF> = HashMap::new();
    fn minor(
        m: &[Vec<TruncatedEGF>],
        row: usize,
        cols: u32,
        order: usize,
        memo: &mut HashMap<u32, TruncatedEGF>,
    ) -> TruncatedEGF {
        if row == m.len() {
            return TruncatedEGF::one(order);
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = TruncatedEGF::zero(order);
        let mut sign_positive = true;
        for c in 0..m.len() {
            if cols & (1 << c) != 0 {
                continue;
            }
            let entry = &m[row][c];
            if entry.coeffs.iter().any(|x| !x.is_zero()) {
                let sub = minor(m, row + 1, cols | (1 << c), order, memo);
                let term = entry * &sub;
                acc = if sign_positive { &acc + &term } else { &acc - &term };
            }
            sign_positive = !sign_positive;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    minor(m, 0, 0, order, &mut memo)
}

fn bessel_matrix(k: usize, order: usize, entry: impl Fn(i64, i64) -> Vec<(i64, i64)>) -> Vec<Vec<TruncatedEGF>> {
    (1..=k as i64)
        .map(|i| {
            (1..=k as i64)
                .map(|j| {
                    entry(i, j)
                        .into_iter()
                        .fold(TruncatedEGF::zero(order), |acc, (sign, m)| {
                            let b = TruncatedEGF::bessel(m, order);
                            if sign > 0 {
                                &acc + &b
                            } else {
                                &acc - &b
                            }
                        })
                })
                .collect()
        })
        .collect()
}

fn to_counts(s: &TruncatedEGF) -> Vec<BigUint> {
    s.egf_integers()
        .expect("integral coefficients")
        .into_iter()
        .map(|c| c.to_biguint().expect("nonnegative count"))
        .collect()
}

/// `det(I_{i-j}(2x) + I_{i+j-1}(2x))_{k x k}` as a series.
pub fn gessel_even_series(k: usize, order: usize) -> TruncatedEGF {
    series_det(&bessel_matrix(k, order, |i, j| vec![(1, i - j), (1, i + j - 1)]), order)
}

/// Tableaux of size `n <= order` with at most `2k` rows, from the determinant.
pub fn gessel_even(k: usize, order: usize) -> Vec<BigUint> {
    to_counts(&gessel_even_series(k, order))
}

/// `det(I_{i-j}(2x) - I_{i+j}(2x))_{k x k}`.
pub fn matching_series(k: usize, order: usize) -> TruncatedEGF {
    series_det(&bessel_matrix(k, order, |i, j| vec![(1, i - j), (-1, i + j)]), order)
}

/// Tableaux of size `n <= order` with at most `2k + 1` rows, from `e^x` times
/// [`matching_series`].
pub fn gessel_odd(k: usize, order: usize) -> Vec<BigUint> {
    to_counts(&(&TruncatedEGF::exp(order) * &matching_series(k, order)))
}

/// Permutations of size `n <= order` with no `(d+1)`-increasing subsequence,
/// from `Σ u_d[n] x^{2n} / n!^2 = det(I_{i-j}(2x))_{d x d}`.
pub fn pairs_formula(d: usize, order: usize) -> Vec<BigUint> {
    let s = series_det(&bessel_matrix(d, 2 * order, |i, j| vec![(1, i - j)]), 2 * order);
    (0..=order)
        .map(|n| {
            let c = s.coeff(2 * n) * BigRational::from_integer(factorial(n) * factorial(n));
            assert!(c.is_integer(), "integral coefficient");
            c.to_integer().to_biguint().expect("nonnegative count")
        })
        .collect()
}

/// `det(I_{λ_i - μ_j}(2x) + I_{λ_i + μ_j}(2x))` for points with
/// half-integer coordinates (stored doubled, as in [`Point`]).
pub fn grabiner_magyar(lambda: &Point, mu: &Point, order: usize) -> TruncatedEGF {
    let k = lambda.dim();
    assert_eq!(k, mu.dim(), "points of equal dimension");
    let l: Vec<i64> = lambda.0.clone();
    let m: Vec<i64> = mu.0.clone();
    assert!(l.iter().chain(&m).all(|c| c.abs() % 2 == 1), "half-integer coordinates");
    let rows: Vec<Vec<TruncatedEGF>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let minus = TruncatedEGF::bessel((l[i] - m[j]) / 2, order);
                    let plus = TruncatedEGF::bessel((l[i] + m[j]) / 2, order);
                    &minus + &plus
                })
                .collect()
        })
        .collect();
    series_det(&rows, order)
}

/// `ρ = (1/2, 3/2, ..., k - 1/2)`, doubled.
pub fn rho(k: usize) -> Point {
    Point((0..k as i64).map(|i| 2 * i + 1).collect())
}

/// `λ'`: the first coordinate negated.
pub fn reflect_first(p: &Point) -> Point {
    let mut q = p.clone();
    if let Some(c) = q.0.first_mut() {
        *c = -*c;
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walks::{binomial, catalan, count_dp_from, Domain, EndPredicate, StepModel};

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn bessel_examples() {
        let i0 = TruncatedEGF::bessel(0, 4);
        assert_eq!(
            (i0.coeff(0), i0.coeff(1), i0.coeff(2), i0.coeff(4)),
            (&r(1, 1), &r(0, 1), &r(1, 1), &r(1, 4))
        );
        let i1 = TruncatedEGF::bessel(1, 3);
        assert_eq!((i1.coeff(1), i1.coeff(3)), (&r(1, 1), &r(1, 2)));
        assert_eq!(TruncatedEGF::bessel(-1, 7), TruncatedEGF::bessel(1, 7));
        assert_eq!(TruncatedEGF::bessel(-3, 9), TruncatedEGF::bessel(3, 9));
        assert_eq!(series_det(&[vec![i0.clone()]], 4), i0);
        assert_eq!(series_det(&[], 3), TruncatedEGF::one(3));
    }

    #[test]
    fn bessel_counts_one_dimensional_walks() {
        for m in -4i64..=4 {
            let s = TruncatedEGF::bessel(m, 10);
            for (n, c) in s.egf_counts().iter().enumerate() {
                let ends = (n as i64 + m) % 2 == 0 && m.unsigned_abs() as usize <= n;
                let expected = if ends {
                    binomial(n as u64, ((n as i64 + m) / 2) as u64)
                } else {
                    BigUint::zero()
                };
                assert_eq!(c.to_integer().to_biguint().unwrap(), expected);
            }
        }
    }

    #[test]
    fn products_and_determinants() {
        let e = TruncatedEGF::exp(6);
        let sq = &e * &e;
        let counts: Vec<BigInt> = (0..=6).map(|n| BigInt::from(1u64 << n)).collect();
        assert_eq!(sq, TruncatedEGF::from_egf_counts(&counts, 6));
        let a = TruncatedEGF::bessel(0, 6);
        let b = TruncatedEGF::bessel(1, 6);
        let det = series_det(&[vec![a.clone(), b.clone()], vec![b.clone(), a.clone()]], 6);
        assert_eq!(det, &(&a * &a) - &(&b * &b));
    }

    #[test]
    fn gessel_one_is_central_binomial() {
        let y2 = gessel_even(1, 10);
        for (n, y) in y2.iter().enumerate() {
            assert_eq!(*y, binomial(n as u64, n as u64 / 2));
        }
        assert_eq!(gessel_odd(0, 5), vec![BigUint::one(); 6]);
        let u2 = pairs_formula(2, 8);
        for (n, u) in u2.iter().enumerate() {
            assert_eq!(*u, catalan(n as u64));
        }
    }

    #[test]
    fn grabiner_magyar_reproduces_gessel() {
        for k in 1..=3 {
            assert_eq!(grabiner_magyar(&rho(k), &rho(k), 10), gessel_even_series(k, 10));
        }
        for k in 1..=2 {
            let s = grabiner_magyar(&rho(k), &rho(k), 8);
            let counts = s.egf_integers().unwrap();
            for n in 0..=8usize {
                let to_rho = count_dp_from(
                    StepModel::simple(k),
                    &Domain::StrictWeylD(k),
                    &rho(k),
                    n,
                    &EndPredicate::Fixed(rho(k)),
                    n,
                );
                let to_reflected = count_dp_from(
                    StepModel::simple(k),
                    &Domain::StrictWeylD(k),
                    &rho(k),
                    n,
                    &EndPredicate::Fixed(reflect_first(&rho(k))),
                    n,
                );
                assert_eq!(
                    counts[n],
                    BigInt::from(to_rho.clone() + to_reflected.clone()),
                    "k={k} n={n}"
                );
                if n % 2 == 0 {
                    assert!(to_reflected.is_zero());
                } else {
                    assert!(to_rho.is_zero());
                }
            }
        }
    }
}
