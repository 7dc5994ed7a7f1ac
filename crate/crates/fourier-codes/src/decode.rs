//! Error control based on the transform eigenstructure.
//!
//! The syndrome of a received word r is S = Fr - lambda r, zero exactly on
//! codewords. Repairs exploit two facts: codewords have the symmetry of
//! their eigenvalue (even for +-1, odd for +-j), and the DC transform row
//! ties position 0 to the sum of the rest. The decoder classifies r by its
//! set of mismatched symbol pairs and tries repair hypotheses in likelihood
//! order, single errors before double, each on a fresh copy of r.

use std::fmt;

use thiserror::Error;

use crate::code::FourierCode;
use crate::eigen::{is_eigensequence, Eigenvalue};
use crate::fntt::{FnttContext, Sequence};
use crate::gf::Residue;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecodeError {
    #[error("lambda * sqrt(N) = 1: the position-0 constraint is degenerate")]
    DegenerateConstraint,
}

/// Which repair procedure produced the corrected word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecodeMethod {
    SingleSymmetric,
    SingleAsymmetric,
    DoubleSymmetric,
    Algorithm1,
    Algorithm2,
    Algorithm3,
}

impl fmt::Display for DecodeMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DecodeMethod::SingleSymmetric => "single-symmetric",
            DecodeMethod::SingleAsymmetric => "single-asymmetric",
            DecodeMethod::DoubleSymmetric => "double-symmetric",
            DecodeMethod::Algorithm1 => "A1",
            DecodeMethod::Algorithm2 => "A2",
            DecodeMethod::Algorithm3 => "A3",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecodeStatus {
    AlreadyCodeword,
    Corrected,
    Failure,
}

impl fmt::Display for DecodeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DecodeStatus::AlreadyCodeword => "ALREADY_CODEWORD",
            DecodeStatus::Corrected => "CORRECTED",
            DecodeStatus::Failure => "FAILURE",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub status: DecodeStatus,
    pub codeword: Option<Sequence>,
    /// r - codeword, when a codeword was found.
    pub error_vector: Option<Sequence>,
    pub errors_corrected: usize,
    pub method: Option<DecodeMethod>,
}

impl DecodeOutcome {
    fn already(r: &Sequence) -> Self {
        Self {
            status: DecodeStatus::AlreadyCodeword,
            codeword: Some(r.clone()),
            error_vector: None,
            errors_corrected: 0,
            method: None,
        }
    }

    fn corrected(r: &Sequence, word: Sequence, method: DecodeMethod) -> Self {
        let errors = r.distance(&word);
        Self {
            status: DecodeStatus::Corrected,
            error_vector: Some(r.sub(&word)),
            codeword: Some(word),
            errors_corrected: errors,
            method: Some(method),
        }
    }

    fn failure() -> Self {
        Self {
            status: DecodeStatus::Failure,
            codeword: None,
            error_vector: None,
            errors_corrected: 0,
            method: None,
        }
    }

    pub fn is_success(&self) -> bool {
        !matches!(self.status, DecodeStatus::Failure)
    }
}

/// S = Fr - lambda r; zero iff r is an eigensequence for lambda.
pub fn syndrome(ctx: &FnttContext, lam: Eigenvalue, r: &Sequence) -> Sequence {
    let spectrum = ctx.forward(r);
    Sequence::from_residues(
        (0..r.len())
            .map(|i| spectrum.get(i) - lam.residue() * r.get(i))
            .collect(),
    )
}

/// The value position 0 must hold for the DC constraint, given the rest:
/// r_0 = (lambda sqrt(N) - 1)^-1 (r_1 + ... + r_(N-1)).
pub fn check_r0(ctx: &FnttContext, lam: Eigenvalue, r: &Sequence) -> Result<Residue, DecodeError> {
    let factor = lam.residue() * ctx.sqrt_n() - ctx.modulus().one();
    let inv = factor.inv().map_err(|_| DecodeError::DegenerateConstraint)?;
    let mut tail = ctx.modulus().zero();
    for i in 1..r.len() {
        tail = tail + r.get(i);
    }
    Ok(inv * tail)
}

/// Position-0 repair value: the DC formula for +-1; for +-j odd symmetry
/// forces r_0 = 0 directly.
fn repaired_r0(code: &FourierCode, r: &Sequence) -> Option<Residue> {
    if code.lambda().symbol().is_imaginary() {
        Some(code.context().modulus().zero())
    } else {
        check_r0(code.context(), code.lambda(), r).ok()
    }
}

/// Position-N/2 repair value from the DC constraint (even N), computed
/// from the original r_0: r_(N/2) = r_0 (lambda sqrt(N) - 1) - sum of the
/// remaining positions. For +-j it is 0.
fn repaired_half(code: &FourierCode, r: &Sequence) -> Residue {
    let ctx = code.context();
    let p = ctx.modulus();
    if code.lambda().symbol().is_imaginary() {
        return p.zero();
    }
    let n = r.len();
    let factor = code.lambda().residue() * ctx.sqrt_n() - p.one();
    let mut rest = p.zero();
    for i in 1..n {
        if i != n / 2 {
            rest = rest + r.get(i);
        }
    }
    r.get(0) * factor - rest
}

/// Pair substitution. `keep_low` propagates the smaller-index value to the
/// larger index (with the sign of the symmetry); otherwise the reverse.
fn substitute(code: &FourierCode, r: &Sequence, i: usize, keep_low: bool) -> Sequence {
    let n = r.len();
    let sigma = code.lambda().symmetry_sign();
    let mut v = r.clone();
    if keep_low {
        v.set(n - i, sigma * r.get(i));
    } else {
        v.set(i, sigma * r.get(n - i));
    }
    v
}

/// The pair indices i in [1, (N-1)/2] where r_i != sigma r_(N-i).
pub fn mismatched_pairs(code: &FourierCode, r: &Sequence) -> Vec<usize> {
    let n = r.len();
    let sigma = code.lambda().symmetry_sign();
    (1..=(n - 1) / 2)
        .filter(|&i| r.get(i) != sigma * r.get(n - i))
        .collect()
}

/// Recompute both members of pair i from the DC constraint:
/// r_i = 2^-1 (lambda sqrt(N) r_0 - sum of the other positions), and
/// r_(N-i) = r_i for +-1 (or -r_i for +-j).
pub fn repair_pair(code: &FourierCode, r: &Sequence, i: usize) -> Sequence {
    let ctx = code.context();
    let p = ctx.modulus();
    let n = r.len();
    let half = p.residue(2).inv().expect("p is odd");
    let mut rest = p.zero();
    for t in 0..n {
        if t != i && t != n - i {
            rest = rest + r.get(t);
        }
    }
    let value = half * (code.lambda().residue() * ctx.sqrt_n() * r.get(0) - rest);
    let mut v = r.clone();
    v.set(i, value);
    v.set(n - i, code.lambda().symmetry_sign() * value);
    v
}

/// Recompute r_(N/2) from its own parity-check row (even N, and only when
/// N/2 is a parity position): row N/2 of H reads r_(N/2) = -sum P[N/2][c] *
/// (information symbols).
fn repair_half_from_parity_row(code: &FourierCode, r: &Sequence) -> Option<Sequence> {
    let n = r.len();
    if n % 2 != 0 {
        return None;
    }
    let half = n / 2;
    let nk = n - code.dimension();
    if half >= nk {
        return None;
    }
    let h = code.parity_check();
    let p = code.context().modulus();
    let mut acc = p.zero();
    for c in nk..n {
        acc = acc + h[(half, c)] * r.get(c);
    }
    let mut v = r.clone();
    v.set(half, -acc);
    Some(v)
}

fn accept(
    code: &FourierCode,
    original: &Sequence,
    candidate: Sequence,
    method: DecodeMethod,
) -> Option<DecodeOutcome> {
    if is_eigensequence(code.context(), &candidate, code.lambda()) {
        Some(DecodeOutcome::corrected(original, candidate, method))
    } else {
        None
    }
}

/// Single error on a word that kept the symmetry of lambda: the error can
/// only sit at position 0 (or N/2 for even N). Each hypothesis starts from
/// the original word.
pub fn decode_single_symmetric(code: &FourierCode, r: &Sequence) -> DecodeOutcome {
    let n = r.len();
    if let Some(v0) = repaired_r0(code, r) {
        let mut v = r.clone();
        v.set(0, v0);
        if let Some(out) = accept(code, r, v, DecodeMethod::SingleSymmetric) {
            return out;
        }
    }
    if n % 2 == 0 {
        let mut v = r.clone();
        v.set(n / 2, repaired_half(code, r));
        if let Some(out) = accept(code, r, v, DecodeMethod::SingleSymmetric) {
            return out;
        }
    }
    DecodeOutcome::failure()
}

/// Single error at a mismatched pair i: one side of the pair is wrong, so
/// try each substitution direction.
pub fn decode_single_asymmetric(code: &FourierCode, r: &Sequence, i: usize) -> DecodeOutcome {
    for keep_low in [false, true] {
        let v = substitute(code, r, i, keep_low);
        if let Some(out) = accept(code, r, v, DecodeMethod::SingleAsymmetric) {
            return out;
        }
    }
    DecodeOutcome::failure()
}

/// Double error on a still-symmetric word: the errors sit in one pair;
/// sweep every pair through the DC repair. For even N the two position-0 /
/// position-N/2 repairs are also composed in both orders.
pub fn decode_double_symmetric(code: &FourierCode, r: &Sequence) -> DecodeOutcome {
    let n = r.len();
    for i in 1..=(n - 1) / 2 {
        let v = repair_pair(code, r, i);
        if let Some(out) = accept(code, r, v, DecodeMethod::DoubleSymmetric) {
            return out;
        }
    }
    if n % 2 == 0 {
        if let Some(v0) = repaired_r0(code, r) {
            let mut v = r.clone();
            v.set(0, v0);
            let fixed_half = repaired_half(code, &v);
            v.set(n / 2, fixed_half);
            if let Some(out) = accept(code, r, v, DecodeMethod::DoubleSymmetric) {
                return out;
            }
        }
        let mut v = r.clone();
        v.set(n / 2, repaired_half(code, r));
        if let Some(v0) = repaired_r0(code, &v) {
            v.set(0, v0);
            if let Some(out) = accept(code, r, v, DecodeMethod::DoubleSymmetric) {
                return out;
            }
        }
    }
    DecodeOutcome::failure()
}

/// The two candidate repairs for errors at position 0 and one side of pair
/// i: substitute across the pair, then recompute r_0 from the DC constraint.
pub fn a1_candidates(code: &FourierCode, r: &Sequence, i: usize) -> Vec<Sequence> {
    let mut out = Vec::with_capacity(2);
    for keep_low in [false, true] {
        let mut v = substitute(code, r, i, keep_low);
        if let Some(v0) = repaired_r0(code, &v) {
            v.set(0, v0);
            out.push(v);
        }
    }
    out
}

pub fn decode_double_a1(code: &FourierCode, r: &Sequence, i: usize) -> DecodeOutcome {
    for v in a1_candidates(code, r, i) {
        if let Some(out) = accept(code, r, v, DecodeMethod::Algorithm1) {
            return out;
        }
    }
    DecodeOutcome::failure()
}

/// Errors on both sides of pair i: recompute the pair from the DC constraint.
pub fn decode_double_a2(code: &FourierCode, r: &Sequence, i: usize) -> DecodeOutcome {
    let v = repair_pair(code, r, i);
    match accept(code, r, v, DecodeMethod::Algorithm2) {
        Some(out) => out,
        None => DecodeOutcome::failure(),
    }
}

/// The four substitution combinations for two mismatched pairs, in ladder
/// order: (low, low), (low, high), (high, low), (high, high), pairs taken
/// in ascending index order.
pub fn a3_candidates(code: &FourierCode, r: &Sequence, i: usize, j: usize) -> Vec<Sequence> {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    let mut out = Vec::with_capacity(4);
    for keep_low_i in [true, false] {
        for keep_low_j in [true, false] {
            let v = substitute(code, r, i, keep_low_i);
            let v = substitute(code, &v, j, keep_low_j);
            out.push(v);
        }
    }
    out
}

pub fn decode_double_a3(code: &FourierCode, r: &Sequence, i: usize, j: usize) -> DecodeOutcome {
    for v in a3_candidates(code, r, i, j) {
        if let Some(out) = accept(code, r, v, DecodeMethod::Algorithm3) {
            return out;
        }
    }
    DecodeOutcome::failure()
}

/// Bounded-distance decoding up to t_max in {1, 2} errors.
///
/// Hypotheses are tried in likelihood order on the mismatch set A (pairs
/// where r_i != sigma r_(N-i)): |A| = 0 means symmetric (errors at the
/// self-paired positions, or a symmetric pair for t_max = 2); |A| = 1 means
/// one side of a pair (plus possibly position 0 or N/2); |A| = 2 means two
/// pairs. The first candidate passing the eigensequence test wins.
pub fn decode(code: &FourierCode, r: &Sequence, t_max: usize) -> DecodeOutcome {
    assert!(t_max == 1 || t_max == 2, "t_max must be 1 or 2");
    if syndrome(code.context(), code.lambda(), r).is_zero() {
        return DecodeOutcome::already(r);
    }
    let pairs = mismatched_pairs(code, r);
    match pairs.len() {
        0 => {
            let out = decode_single_symmetric(code, r);
            if out.is_success() || t_max < 2 {
                return out;
            }
            decode_double_symmetric(code, r)
        }
        1 => {
            let i = pairs[0];
            let out = decode_single_asymmetric(code, r, i);
            if out.is_success() || t_max < 2 {
                return out;
            }
            let out = decode_double_a1(code, r, i);
            if out.is_success() {
                return out;
            }
            let out = decode_double_a2(code, r, i);
            if out.is_success() {
                return out;
            }
            // even N: one error in the pair, the other at N/2
            for keep_low in [false, true] {
                let v = substitute(code, r, i, keep_low);
                if let Some(v) = repair_half_from_parity_row(code, &v) {
                    if let Some(out) = accept(code, r, v, DecodeMethod::Algorithm1) {
                        return out;
                    }
                }
            }
            DecodeOutcome::failure()
        }
        2 if t_max >= 2 => decode_double_a3(code, r, pairs[0], pairs[1]),
        _ => DecodeOutcome::failure(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::construct;
    use crate::eigen::EigenvalueSymbol;
    use crate::fntt::FnttContext;
    use crate::gf::PrimeModulus;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    fn code(p: u64, n: usize, sym: EigenvalueSymbol) -> FourierCode {
        let ctx = FnttContext::with_defaults(PrimeModulus::new(p).unwrap(), n).unwrap();
        let lam = Eigenvalue::in_context(&ctx, sym).unwrap();
        construct(&ctx, lam).unwrap()
    }

    fn seq(code: &FourierCode, vals: &[u64]) -> Sequence {
        code.context().sequence(vals).unwrap()
    }

    #[test]
    fn syndrome_zero_exactly_on_codewords() {
        let c = code(29, 7, EigenvalueSymbol::PlusOne);
        for row in 0..2 {
            let w = Sequence::from_residues(c.generator().row(row).to_vec());
            assert!(syndrome(c.context(), c.lambda(), &w).is_zero());
        }
        assert!(syndrome(c.context(), c.lambda(), &c.context().zero_sequence()).is_zero());
        let r = seq(&c, &[16, 2, 1, 10, 10, 1, 3]);
        assert!(!syndrome(c.context(), c.lambda(), &r).is_zero());
    }

    #[test]
    fn check_r0_worked_values() {
        let c = code(29, 7, EigenvalueSymbol::PlusOne);
        let r = seq(&c, &[0, 3, 1, 10, 10, 1, 3]);
        assert_eq!(check_r0(c.context(), c.lambda(), &r).unwrap().value(), 23);
        let r = seq(&c, &[0, 2, 1, 10, 10, 1, 2]);
        assert_eq!(check_r0(c.context(), c.lambda(), &r).unwrap().value(), 11);
        let r = seq(&c, &[5, 0, 0, 0, 0, 0, 0]);
        assert_eq!(check_r0(c.context(), c.lambda(), &r).unwrap().value(), 0);
    }

    #[test]
    fn check_r0_consistent_on_codewords() {
        for (p, n, sym) in [
            (41u64, 5usize, EigenvalueSymbol::PlusOne),
            (41, 5, EigenvalueSymbol::MinusOne),
            (41, 5, EigenvalueSymbol::PlusJ),
            (29, 7, EigenvalueSymbol::PlusOne),
            (29, 7, EigenvalueSymbol::MinusOne),
            (17, 8, EigenvalueSymbol::PlusOne),
            (17, 8, EigenvalueSymbol::MinusJ),
        ] {
            let c = code(p, n, sym);
            let k = c.dimension();
            let total = p.pow(k as u32);
            assert!(total <= 10_000);
            for m in 0..total {
                let mut digits = Vec::with_capacity(k);
                let mut v = m;
                for _ in 0..k {
                    digits.push(v % p);
                    v /= p;
                }
                let w = c.encode(&digits).unwrap();
                let want = check_r0(c.context(), c.lambda(), &w).unwrap();
                assert_eq!(want, w.get(0), "p={p} n={n} lam={sym} m={m}");
            }
        }
    }

    #[test]
    fn check_r0_degenerate_case() {
        // over GF(5) with N = 4, sqrt(4) = 2 and -j = 3, so lambda sqrt(N) = 6 = 1
        let ctx = FnttContext::with_defaults(PrimeModulus::new(5).unwrap(), 4).unwrap();
        let lam = Eigenvalue::in_context(&ctx, EigenvalueSymbol::MinusJ).unwrap();
        let r = ctx.zero_sequence();
        assert_eq!(
            check_r0(&ctx, lam, &r),
            Err(DecodeError::DegenerateConstraint)
        );
    }

    #[test]
    fn single_symmetric_position_zero_exhaustive() {
        let c = code(29, 7, EigenvalueSymbol::PlusOne);
        let w = seq(&c, &[16, 0, 1, 10, 10, 1, 0]);
        for e in 1..29 {
            let mut r = w.clone();
            r.set(0, r.get(0) + c.context().modulus().residue(e));
            let out = decode_single_symmetric(&c, &r);
            assert_eq!(out.status, DecodeStatus::Corrected);
            assert_eq!(out.codeword.as_ref().unwrap(), &w);
            assert_eq!(out.errors_corrected, 1);
        }
    }

    #[test]
    fn single_symmetric_half_position_exhaustive() {
        let c = code(17, 8, EigenvalueSymbol::PlusOne);
        let w = c.encode(&[1, 2, 3]).unwrap();
        for e in 1..17 {
            let mut r = w.clone();
            r.set(4, r.get(4) + c.context().modulus().residue(e));
            let out = decode_single_symmetric(&c, &r);
            assert_eq!(out.status, DecodeStatus::Corrected);
            assert_eq!(out.codeword.as_ref().unwrap(), &w);
        }
    }

    #[test]
    fn single_asymmetric_examples() {
        let c7 = code(29, 7, EigenvalueSymbol::PlusOne);
        let r = seq(&c7, &[16, 0, 1, 10, 10, 1, 5]);
        let out = decode_single_asymmetric(&c7, &r, 1);
        assert_eq!(out.status, DecodeStatus::Corrected);
        assert_eq!(
            out.codeword.unwrap().values(),
            vec![16, 0, 1, 10, 10, 1, 0]
        );

        let c5 = code(41, 5, EigenvalueSymbol::PlusOne);
        let r = seq(&c5, &[7, 9, 1, 1, 0]);
        let out = decode_single_asymmetric(&c5, &r, 1);
        assert_eq!(out.status, DecodeStatus::Corrected);
        assert_eq!(out.codeword.unwrap().values(), vec![7, 0, 1, 1, 0]);
    }

    #[test]
    fn repair_pair_worked_example_and_idempotence() {
        let c = code(29, 7, EigenvalueSymbol::PlusOne);
        let r = seq(&c, &[16, 2, 1, 10, 10, 1, 3]);
        let v = repair_pair(&c, &r, 1);
        assert_eq!(v.values(), vec![16, 0, 1, 10, 10, 1, 0]);
        // codewords are fixed points
        let w = c.encode(&[4, 9]).unwrap();
        for i in 1..=3 {
            assert_eq!(repair_pair(&c, &w, i), w);
        }
    }

    #[test]
    fn repair_pair_restores_symmetric_corruption() {
        let c = code(29, 7, EigenvalueSymbol::PlusOne);
        let w = seq(&c, &[20, 1, 0, 20, 20, 0, 1]);
        let p = c.context().modulus();
        for e in 1..29u64 {
            let mut r = w.clone();
            r.set(2, r.get(2) + p.residue(e));
            r.set(5, r.get(5) + p.residue(e));
            let out = decode_double_symmetric(&c, &r);
            assert_eq!(out.status, DecodeStatus::Corrected);
            assert_eq!(out.codeword.as_ref().unwrap(), &w);
        }
    }

    #[test]
    fn double_symmetric_rejects_triple_corruption() {
        let c = code(29, 7, EigenvalueSymbol::PlusOne);
        let w = seq(&c, &[16, 0, 1, 10, 10, 1, 0]);
        let p = c.context().modulus();
        // symmetric corruption of pair 1 plus position 0: three wrong symbols
        let mut r = w.clone();
        r.set(1, r.get(1) + p.residue(9));
        r.set(6, r.get(6) + p.residue(9));
        r.set(0, r.get(0) + p.residue(7));
        let out = decode_double_symmetric(&c, &r);
        assert_eq!(out.status, DecodeStatus::Failure);
    }

    #[test]
    fn a1_worked_example_fails_with_printed_intermediates() {
        let c = code(29, 7, EigenvalueSymbol::PlusOne);
        let r = seq(&c, &[16, 2, 1, 10, 10, 1, 3]);
        let cands = a1_candidates(&c, &r, 1);
        assert_eq!(cands[0].values(), vec![23, 3, 1, 10, 10, 1, 3]);
        assert_eq!(
            c.context().forward(&cands[0]).values(),
            vec![23, 22, 25, 25, 25, 25, 22]
        );
        assert_eq!(cands[1].values(), vec![11, 2, 1, 10, 10, 1, 2]);
        assert_eq!(
            c.context().forward(&cands[1]).values(),
            vec![11, 5, 17, 20, 20, 17, 5]
        );
        assert_eq!(decode_double_a1(&c, &r, 1).status, DecodeStatus::Failure);
    }

    #[test]
    fn a1_corrects_position_zero_plus_pair_errors() {
        let c = code(29, 7, EigenvalueSymbol::PlusOne);
        let w = c.encode(&[3, 11]).unwrap();
        let p = c.context().modulus();
        for e0 in 1..29u64 {
            for e1 in 1..29u64 {
                let mut r = w.clone();
                r.set(0, r.get(0) + p.residue(e0));
                r.set(1, r.get(1) + p.residue(e1));
                let out = decode_double_a1(&c, &r, 1);
                assert_eq!(out.status, DecodeStatus::Corrected, "e0={e0} e1={e1}");
                assert_eq!(out.codeword.as_ref().unwrap(), &w);
            }
        }
    }

    #[test]
    fn a2_worked_example() {
        let c = code(29, 7, EigenvalueSymbol::PlusOne);
        let r = seq(&c, &[16, 2, 1, 10, 10, 1, 3]);
        let out = decode_double_a2(&c, &r, 1);
        assert_eq!(out.status, DecodeStatus::Corrected);
        assert_eq!(out.method, Some(DecodeMethod::Algorithm2));
        assert_eq!(
            out.codeword.unwrap().values(),
            vec![16, 0, 1, 10, 10, 1, 0]
        );
    }

    #[test]
    fn a2_corrects_independent_pair_errors() {
        let c = code(29, 7, EigenvalueSymbol::PlusOne);
        let w = c.encode(&[1, 0]).unwrap();
        let p = c.context().modulus();
        for x in 1..29u64 {
            for y in 1..29u64 {
                let mut r = w.clone();
                r.set(1, r.get(1) + p.residue(x));
                r.set(6, r.get(6) + p.residue(y));
                let out = decode(&c, &r, 2);
                assert_eq!(out.status, DecodeStatus::Corrected, "x={x} y={y}");
                assert_eq!(out.codeword.as_ref().unwrap(), &w);
            }
        }
    }

    #[test]
    fn a3_worked_example() {
        let c = code(29, 7, EigenvalueSymbol::PlusOne);
        let r = seq(&c, &[16, 2, 3, 10, 10, 1, 0]);
        let cands = a3_candidates(&c, &r, 1, 2);
        assert_eq!(cands[0].values(), vec![16, 2, 3, 10, 10, 3, 2]);
        assert_eq!(
            c.context().forward(&cands[0]).values(),
            vec![27, 13, 19, 17, 17, 19, 13]
        );
        assert_eq!(cands[1].values(), vec![16, 2, 1, 10, 10, 1, 2]);
        assert_eq!(
            c.context().forward(&cands[1]).values(),
            vec![7, 1, 13, 16, 16, 13, 1]
        );
        assert_eq!(cands[2].values(), vec![16, 0, 3, 10, 10, 3, 0]);
        assert_eq!(
            c.context().forward(&cands[2]).values(),
            vec![7, 12, 7, 11, 11, 7, 12]
        );
        assert_eq!(cands[3].values(), vec![16, 0, 1, 10, 10, 1, 0]);
        let out = decode_double_a3(&c, &r, 1, 2);
        assert_eq!(out.status, DecodeStatus::Corrected);
        assert_eq!(
            out.codeword.unwrap().values(),
            vec![16, 0, 1, 10, 10, 1, 0]
        );
    }

    #[test]
    fn a3_corrects_two_pair_errors_and_rejects_four() {
        let c = code(29, 7, EigenvalueSymbol::PlusOne);
        let w = c.encode(&[1, 0]).unwrap();
        let p = c.context().modulus();
        let mut r = w.clone();
        r.set(1, r.get(1) + p.residue(3));
        r.set(2, r.get(2) + p.residue(9));
        let out = decode(&c, &r, 2);
        assert_eq!(out.status, DecodeStatus::Corrected);
        assert_eq!(out.method, Some(DecodeMethod::Algorithm3));
        assert_eq!(out.codeword.as_ref().unwrap(), &w);

        let mut r4 = w.clone();
        for (pos, e) in [(1, 3), (2, 9), (5, 4), (6, 7)] {
            r4.set(pos, r4.get(pos) + p.residue(e));
        }
        // four corrupted positions: three mismatched pairs is impossible at
        // N=7, but these two pairs are both doubly wrong
        let out = decode(&c, &r4, 2);
        assert!(
            out.status == DecodeStatus::Failure
                || out.codeword.map(|cw| cw.distance(&r4) > 2).unwrap_or(false) == false,
        );
    }

    #[test]
    fn decode_ladder_end_to_end() {
        let c = code(29, 7, EigenvalueSymbol::PlusOne);
        let r = seq(&c, &[16, 2, 1, 10, 10, 1, 3]);
        let out = decode(&c, &r, 2);
        assert_eq!(out.status, DecodeStatus::Corrected);
        assert_eq!(out.method, Some(DecodeMethod::Algorithm2));
        assert_eq!(out.errors_corrected, 2);
        assert_eq!(
            out.codeword.unwrap().values(),
            vec![16, 0, 1, 10, 10, 1, 0]
        );

        let r = seq(&c, &[16, 2, 3, 10, 10, 1, 0]);
        let out = decode(&c, &r, 2);
        assert_eq!(out.method, Some(DecodeMethod::Algorithm3));

        let w = seq(&c, &[20, 1, 0, 20, 20, 0, 1]);
        let out = decode(&c, &w, 2);
        assert_eq!(out.status, DecodeStatus::AlreadyCodeword);

        // t_max = 1 refuses double hypotheses
        let r = seq(&c, &[16, 2, 1, 10, 10, 1, 3]);
        assert_eq!(decode(&c, &r, 1).status, DecodeStatus::Failure);
    }

    #[test]
    fn decode_corrects_all_single_errors() {
        let mut rng = ChaCha20Rng::seed_from_u64(31);
        for (p, n, sym) in [
            (41u64, 5usize, EigenvalueSymbol::PlusOne),
            (29, 7, EigenvalueSymbol::PlusOne),
            (17, 8, EigenvalueSymbol::PlusOne),
            (41, 5, EigenvalueSymbol::MinusOne),
        ] {
            let c = code(p, n, sym);
            let k = c.dimension();
            for _ in 0..5 {
                let msg: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
                let w = c.encode(&msg).unwrap();
                for pos in 0..n {
                    for e in 1..p {
                        let mut r = w.clone();
                        r.set(pos, r.get(pos) + c.context().modulus().residue(e));
                        let out = decode(&c, &r, 1);
                        assert_eq!(
                            out.status,
                            DecodeStatus::Corrected,
                            "p={p} n={n} lam={sym} pos={pos} e={e}"
                        );
                        assert_eq!(out.codeword.as_ref().unwrap(), &w);
                        assert_eq!(out.errors_corrected, 1);
                    }
                }
            }
        }
    }

    #[test]
    fn decode_corrects_single_errors_on_odd_code() {
        // +-j codes have odd-symmetric codewords; single errors still decode
        let c = code(41, 5, EigenvalueSymbol::PlusJ);
        let w = c.encode(&[6]).unwrap();
        for pos in 0..5 {
            for e in 1..41 {
                let mut r = w.clone();
                r.set(pos, r.get(pos) + c.context().modulus().residue(e));
                let out = decode(&c, &r, 1);
                assert_eq!(out.status, DecodeStatus::Corrected, "pos={pos} e={e}");
                assert_eq!(out.codeword.as_ref().unwrap(), &w);
            }
        }
    }

    #[test]
    fn even_n_pair_plus_half_double_error() {
        let c = code(17, 8, EigenvalueSymbol::PlusOne);
        let w = c.encode(&[5, 0, 11]).unwrap();
        let p = c.context().modulus();
        for e1 in 1..17u64 {
            for e2 in 1..17u64 {
                let mut r = w.clone();
                r.set(2, r.get(2) + p.residue(e1));
                r.set(4, r.get(4) + p.residue(e2));
                let out = decode(&c, &r, 2);
                assert_eq!(out.status, DecodeStatus::Corrected, "e1={e1} e2={e2}");
                assert_eq!(out.codeword.as_ref().unwrap(), &w);
            }
        }
    }

    #[test]
    fn decoder_never_overshoots_t_max() {
        let mut rng = ChaCha20Rng::seed_from_u64(77);
        for (p, n, sym) in [
            (29u64, 7usize, EigenvalueSymbol::PlusOne),
            (17, 8, EigenvalueSymbol::PlusOne),
            (41, 5, EigenvalueSymbol::PlusJ),
        ] {
            let c = code(p, n, sym);
            for _ in 0..10_000 {
                let vals: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
                let r = c.context().sequence(&vals).unwrap();
                let out = decode(&c, &r, 2);
                if let Some(w) = &out.codeword {
                    assert!(c.contains(w) || out.status == DecodeStatus::AlreadyCodeword);
                    assert!(r.distance(w) <= 2, "overshoot at r={r}");
                    assert!(syndrome(c.context(), c.lambda(), w).is_zero());
                }
            }
        }
    }
}
