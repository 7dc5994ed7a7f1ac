//! The unitary Fourier number theoretic transform over GF(p).
//!
//! A context fixes the block length N, an order-N element alpha, a branch of
//! sqrt(N), and (when p = 1 mod 4) a root j of -1. The transform matrix is
//! F[k][n] = (sqrt N)^-1 * alpha^(k n); both directions carry the same
//! normalization, so F is its own inverse up to index reversal (F^2 = R,
//! F^4 = I). Transforms are computed as direct matrix-vector products.

use std::fmt;

use thiserror::Error;

use crate::gf::{self, PrimeModulus, Residue};
use crate::matrix::Matrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FnttError {
    #[error("invalid parameters: N={n} over GF({p}) (need N >= 2, N | p-1, and N a quadratic residue of p)")]
    InvalidParameters { p: u64, n: usize },
    #[error("alpha={alpha} does not have multiplicative order {n} mod {p}")]
    AlphaOrder { alpha: u64, n: usize, p: u64 },
    #[error("sqrt branch {value} squared is not N mod {p}")]
    SqrtBranch { value: u64, p: u64 },
    #[error("j branch {value} squared is not -1 mod {p}")]
    JBranch { value: u64, p: u64 },
    #[error("no root of -1 exists in GF({p}) (p = 3 mod 4)")]
    JUnavailable { p: u64 },
    #[error("sequence length {got} does not match block length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("symbol {value} out of range for GF({p})")]
    SymbolOutOfRange { value: u64, p: u64 },
}

/// Optional overrides for context construction; defaults are canonical
/// (smallest alpha of order N, smaller-representative sqrt(N) and j).
#[derive(Debug, Clone, Copy, Default)]
pub struct ContextOptions {
    pub alpha: Option<u64>,
    pub sqrt_branch: Option<u64>,
    pub j_branch: Option<u64>,
}

/// A validated transform context: (p, N, alpha, sqrt N, j) and the matrix F.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FnttContext {
    modulus: PrimeModulus,
    n: usize,
    alpha: Residue,
    sqrt_n: Residue,
    inv_sqrt_n: Residue,
    j: Option<Residue>,
    f: Matrix,
}

impl FnttContext {
    pub fn build(p: PrimeModulus, n: usize, options: ContextOptions) -> Result<Self, FnttError> {
        if n < 2 || !gf::is_valid_fntt_params(p, n as u64) {
            return Err(FnttError::InvalidParameters { p: p.get(), n });
        }

        let alpha = match options.alpha {
            Some(a) => {
                let a = p.residue(a);
                if !gf::has_order(a, n as u64) {
                    return Err(FnttError::AlphaOrder {
                        alpha: a.value(),
                        n,
                        p: p.get(),
                    });
                }
                a
            }
            None => gf::element_of_order(n as u64, p).expect("order-N element exists"),
        };

        let canonical_sqrt = gf::sqrt_mod(p.residue(n as u64)).expect("N is a quadratic residue");
        let sqrt_n = match options.sqrt_branch {
            Some(b) => {
                let b = p.residue(b);
                if (b * b).value() != n as u64 % p.get() {
                    return Err(FnttError::SqrtBranch {
                        value: b.value(),
                        p: p.get(),
                    });
                }
                b
            }
            None => canonical_sqrt.0,
        };

        let j = match options.j_branch {
            Some(v) => {
                if !p.has_root_of_minus_one() {
                    return Err(FnttError::JUnavailable { p: p.get() });
                }
                let v = p.residue(v);
                if (v * v).value() != p.get() - 1 {
                    return Err(FnttError::JBranch {
                        value: v.value(),
                        p: p.get(),
                    });
                }
                Some(v)
            }
            None => {
                if p.has_root_of_minus_one() {
                    Some(gf::sqrt_mod(p.residue(p.get() - 1)).expect("-1 is a QR").0)
                } else {
                    None
                }
            }
        };

        let inv_sqrt_n = sqrt_n.inv().expect("sqrt N is nonzero");
        let mut f = Matrix::zeros(n, n, p);
        let alpha_pow: Vec<Residue> = {
            let mut pows = Vec::with_capacity(n);
            let mut acc = p.one();
            for _ in 0..n {
                pows.push(acc);
                acc = acc * alpha;
            }
            pows
        };
        for k in 0..n {
            for t in 0..n {
                f[(k, t)] = inv_sqrt_n * alpha_pow[(k * t) % n];
            }
        }

        Ok(Self {
            modulus: p,
            n,
            alpha,
            sqrt_n,
            inv_sqrt_n,
            j,
            f,
        })
    }

    pub fn with_defaults(p: PrimeModulus, n: usize) -> Result<Self, FnttError> {
        Self::build(p, n, ContextOptions::default())
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn alpha(&self) -> Residue {
        self.alpha
    }

    pub fn sqrt_n(&self) -> Residue {
        self.sqrt_n
    }

    pub fn inv_sqrt_n(&self) -> Residue {
        self.inv_sqrt_n
    }

    pub fn j(&self) -> Option<Residue> {
        self.j
    }

    pub fn transform_matrix(&self) -> &Matrix {
        &self.f
    }

    /// Validate raw symbols into a Sequence for this context.
    pub fn sequence(&self, values: &[u64]) -> Result<Sequence, FnttError> {
        if values.len() != self.n {
            return Err(FnttError::LengthMismatch {
                expected: self.n,
                got: values.len(),
            });
        }
        let p = self.modulus.get();
        for &v in values {
            if v >= p {
                return Err(FnttError::SymbolOutOfRange { value: v, p });
            }
        }
        Ok(Sequence {
            entries: values.iter().map(|&v| self.modulus.residue(v)).collect(),
        })
    }

    pub fn zero_sequence(&self) -> Sequence {
        Sequence {
            entries: vec![self.modulus.zero(); self.n],
        }
    }

    /// Forward transform: X_k = (sqrt N)^-1 sum_n x_n alpha^(k n).
    pub fn forward(&self, x: &Sequence) -> Sequence {
        assert_eq!(x.len(), self.n, "sequence length mismatch");
        Sequence {
            entries: (0..self.n)
                .map(|k| {
                    let row = self.f.row(k);
                    let mut acc = self.modulus.zero();
                    for (a, b) in row.iter().zip(x.entries.iter()) {
                        acc = acc + *a * *b;
                    }
                    acc
                })
                .collect(),
        }
    }

    /// Inverse transform: x_n = (sqrt N)^-1 sum_k X_k alpha^(-k n).
    pub fn inverse(&self, x: &Sequence) -> Sequence {
        assert_eq!(x.len(), self.n, "sequence length mismatch");
        // alpha^-1 = alpha^(N-1)
        let alpha_inv = self.alpha.pow(self.n as u64 - 1);
        let mut pows = Vec::with_capacity(self.n);
        let mut acc = self.modulus.one();
        for _ in 0..self.n {
            pows.push(acc);
            acc = acc * alpha_inv;
        }
        Sequence {
            entries: (0..self.n)
                .map(|t| {
                    let mut acc = self.modulus.zero();
                    for (k, xk) in x.entries.iter().enumerate() {
                        acc = acc + *xk * pows[(k * t) % self.n];
                    }
                    acc * self.inv_sqrt_n
                })
                .collect(),
        }
    }
}

/// A length-N vector of GF(p) residues: signals, codewords, received words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence {
    entries: Vec<Residue>,
}

impl Sequence {
    pub fn from_residues(entries: Vec<Residue>) -> Self {
        assert!(!entries.is_empty(), "empty sequence");
        let m = entries[0].modulus();
        assert!(
            entries.iter().all(|e| e.modulus() == m),
            "mixed moduli in sequence"
        );
        Self { entries }
    }

    pub fn entries(&self) -> &[Residue] {
        &self.entries
    }

    pub fn values(&self) -> Vec<u64> {
        self.entries.iter().map(|r| r.value()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Residue {
        self.entries[i]
    }

    pub fn set(&mut self, i: usize, v: Residue) {
        self.entries[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.is_zero())
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|r| !r.is_zero()).count()
    }

    /// Hamming distance.
    pub fn distance(&self, other: &Sequence) -> usize {
        assert_eq!(self.len(), other.len(), "sequence length mismatch");
        self.entries
            .iter()
            .zip(other.entries.iter())
            .filter(|(a, b)| a != b)
            .count()
    }

    /// Componentwise difference self - other.
    pub fn sub(&self, other: &Sequence) -> Sequence {
        assert_eq!(self.len(), other.len(), "sequence length mismatch");
        Sequence {
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(a, b)| *a - *b)
                .collect(),
        }
    }

    /// Componentwise scalar multiple.
    pub fn scale(&self, c: Residue) -> Sequence {
        Sequence {
            entries: self.entries.iter().map(|a| *a * c).collect(),
        }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// E(x)_i = 2^-1 (x_i + x_(N-i mod N)).
pub fn even_part(x: &Sequence) -> Sequence {
    let n = x.len();
    let half = x.get(0).modulus().residue(2).inv().expect("p is odd");
    Sequence {
        entries: (0..n)
            .map(|i| (x.get(i) + x.get((n - i) % n)) * half)
            .collect(),
    }
}

/// O(x)_i = 2^-1 (x_i - x_(N-i mod N)); even_part + odd_part = x.
pub fn odd_part(x: &Sequence) -> Sequence {
    let n = x.len();
    let half = x.get(0).modulus().residue(2).inv().expect("p is odd");
    Sequence {
        entries: (0..n)
            .map(|i| (x.get(i) - x.get((n - i) % n)) * half)
            .collect(),
    }
}

/// Even symmetry: x_i = x_(N-i mod N) for all i.
pub fn is_even(x: &Sequence) -> bool {
    let n = x.len();
    (0..n).all(|i| x.get(i) == x.get((n - i) % n))
}

/// Odd symmetry: x_i = -x_(N-i mod N) for all i (forces x_0 = 0, and
/// x_(N/2) = 0 for even N).
pub fn is_odd(x: &Sequence) -> bool {
    let n = x.len();
    (0..n).all(|i| x.get(i) == -x.get((n - i) % n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    fn ctx(p: u64, n: usize) -> FnttContext {
        FnttContext::with_defaults(PrimeModulus::new(p).unwrap(), n).unwrap()
    }

    fn random_sequence(ctx: &FnttContext, rng: &mut ChaCha20Rng) -> Sequence {
        let vals: Vec<u64> = (0..ctx.len())
            .map(|_| rng.gen_range(0..ctx.modulus().get()))
            .collect();
        ctx.sequence(&vals).unwrap()
    }

    #[test]
    fn gf5_context_matches_known_matrix() {
        let c = ctx(5, 4);
        assert_eq!(c.alpha().value(), 2);
        assert_eq!(c.sqrt_n().value(), 2);
        assert_eq!(c.j().unwrap().value(), 2);
        assert_eq!(
            c.transform_matrix().to_rows_u64(),
            vec![
                vec![3, 3, 3, 3],
                vec![3, 1, 2, 4],
                vec![3, 2, 3, 2],
                vec![3, 4, 2, 1]
            ]
        );
    }

    #[test]
    fn gf41_canonical_parameters() {
        let c = ctx(41, 5);
        assert_eq!(c.alpha().value(), 10);
        assert_eq!(c.sqrt_n().value(), 13);
        assert_eq!(c.j().unwrap().value(), 9);
        assert_eq!(c.transform_matrix()[(0, 0)].value(), 19);
    }

    #[test]
    fn invalid_parameters_rejected() {
        let p5 = PrimeModulus::new(5).unwrap();
        assert!(matches!(
            FnttContext::with_defaults(p5, 3),
            Err(FnttError::InvalidParameters { .. })
        ));
        let p41 = PrimeModulus::new(41).unwrap();
        assert!(matches!(
            FnttContext::build(
                p41,
                5,
                ContextOptions {
                    alpha: Some(2),
                    ..Default::default()
                }
            ),
            Err(FnttError::AlphaOrder { .. })
        ));
        assert!(matches!(
            FnttContext::build(
                p41,
                5,
                ContextOptions {
                    sqrt_branch: Some(7),
                    ..Default::default()
                }
            ),
            Err(FnttError::SqrtBranch { .. })
        ));
    }

    #[test]
    fn j_unavailable_when_p_is_3_mod_4() {
        // 5 | 10 and 5 = 4^2 mod 11, but 11 = 3 mod 4
        let p11 = PrimeModulus::new(11).unwrap();
        let c = FnttContext::with_defaults(p11, 5).unwrap();
        assert!(c.j().is_none());
        assert_eq!(c.sqrt_n().value(), 4);
        assert!(matches!(
            FnttContext::build(
                p11,
                5,
                ContextOptions {
                    j_branch: Some(6),
                    ..Default::default()
                }
            ),
            Err(FnttError::JUnavailable { .. })
        ));
    }

    #[test]
    fn forward_example_spectrum() {
        let c = ctx(5, 4);
        let x = c.sequence(&[4, 2, 1, 4]).unwrap();
        assert_eq!(c.forward(&x).values(), vec![3, 2, 2, 1]);
        assert_eq!(c.inverse(&c.sequence(&[3, 2, 2, 1]).unwrap()).values(), vec![4, 2, 1, 4]);
        assert!(c.forward(&c.zero_sequence()).is_zero());
    }

    #[test]
    fn codeword_is_transform_fixed_point() {
        let c = ctx(29, 7);
        let x = c.sequence(&[16, 0, 1, 10, 10, 1, 0]).unwrap();
        assert_eq!(c.forward(&x), x);
    }

    #[test]
    fn even_odd_parts_example() {
        let c = ctx(5, 4);
        let x = c.sequence(&[4, 2, 1, 4]).unwrap();
        assert_eq!(even_part(&x).values(), vec![4, 3, 1, 3]);
        assert_eq!(odd_part(&x).values(), vec![0, 4, 0, 1]);
        let big_x = c.sequence(&[3, 2, 2, 1]).unwrap();
        assert_eq!(even_part(&big_x).values(), vec![3, 4, 2, 4]);
        assert_eq!(odd_part(&big_x).values(), vec![0, 3, 0, 2]);
    }

    #[test]
    fn symmetry_predicates() {
        let c = ctx(5, 4);
        assert!(is_even(&c.sequence(&[2, 2, 3, 2]).unwrap()));
        assert!(is_odd(&c.sequence(&[0, 3, 0, 2]).unwrap()));
        let z = c.zero_sequence();
        assert!(is_even(&z) && is_odd(&z));
        let even = c.sequence(&[1, 4, 2, 4]).unwrap();
        assert_eq!(even_part(&even), even);
        assert!(odd_part(&even).is_zero());
    }

    #[test]
    fn transform_powers() {
        for (p, n) in [(5, 4), (41, 5), (17, 8), (29, 7), (13, 12), (73, 6)] {
            let c = ctx(p, n);
            let f = c.transform_matrix();
            let f2 = f.mul(f);
            let f4 = f2.mul(&f2);
            assert_eq!(f4, Matrix::identity(n, c.modulus()), "F^4 != I for p={p} N={n}");
            // F^2 is index reversal
            let mut rng = ChaCha20Rng::seed_from_u64(7);
            for _ in 0..20 {
                let x = random_sequence(&c, &mut rng);
                let fx2 = c.forward(&c.forward(&x));
                for i in 0..n {
                    assert_eq!(fx2.get(i), x.get((n - i) % n));
                }
            }
        }
    }

    #[test]
    fn round_trip_and_decomposition() {
        let mut rng = ChaCha20Rng::seed_from_u64(42);
        for (p, n) in [(5u64, 4usize), (41, 5), (17, 8), (29, 7), (13, 12)] {
            let c = ctx(p, n);
            for _ in 0..100 {
                let x = random_sequence(&c, &mut rng);
                assert_eq!(c.inverse(&c.forward(&x)), x);
                let e = even_part(&x);
                let o = odd_part(&x);
                assert!(is_even(&e));
                assert!(is_odd(&o));
                let sum = Sequence::from_residues(
                    (0..n).map(|i| e.get(i) + o.get(i)).collect(),
                );
                assert_eq!(sum, x);
                // the transform preserves symmetry class
                assert!(is_even(&c.forward(&e)));
                assert!(is_odd(&c.forward(&o)));
            }
        }
    }

    proptest! {
        #[test]
        fn forward_inverse_round_trip(vals in prop::collection::vec(0u64..41, 5)) {
            let c = ctx(41, 5);
            let x = c.sequence(&vals).unwrap();
            prop_assert_eq!(c.inverse(&c.forward(&x)), x);
        }
    }
}
