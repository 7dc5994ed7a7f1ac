//! Fourier code construction.
//!
//! For each eigenvalue lambda, (F - lambda I) acts as a parity-check matrix;
//! Gauss-Jordan reduction without column permutation brings it to the
//! standard form H = [I | P], from which G = [-P^T | I]. The dimension k is
//! the eigenvalue multiplicity, the last k symbols of a codeword are the
//! information symbols, and every row of G is an eigensequence.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eigen::{self, Eigenvalue, EigenvalueSymbol};
use crate::fntt::{ContextOptions, FnttContext, FnttError, Sequence};
use crate::gf::{self, PrimeModulus};
use crate::matrix::Matrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("the eigenspace of lambda={lambda} is trivial: empty code")]
    EmptyCode { lambda: String },
    #[error("row reduction pivots {pivots:?} do not form the leading identity block")]
    NonStandardPivots { pivots: Vec<usize> },
    #[error("codeword enumeration p^k = {size} exceeds the 10^7 guard")]
    SearchSpaceTooLarge { size: u128 },
    #[error("message has {got} symbols, expected {expected}")]
    MessageLength { expected: usize, got: usize },
    #[error("no prime p <= 10^6 satisfies the constraints for N={n}")]
    NoAdmissiblePrime { n: usize },
    #[error("document is inconsistent with the reconstructed code: {field}")]
    DocumentMismatch { field: &'static str },
    #[error(transparent)]
    Context(#[from] FnttError),
    #[error(transparent)]
    Eigen(#[from] eigen::EigenError),
}

/// A constructed Fourier code over GF(p) with standard-form H and G.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourierCode {
    ctx: FnttContext,
    lam: Eigenvalue,
    h: Matrix,
    g: Matrix,
    d_bound: usize,
    d_exact: Option<usize>,
}

/// Upper bound on the minimum distance: n - 2k + 2 for lambda = +-1 and
/// n - 2k for lambda = +-j.
pub fn dmin_bound(n: usize, k: usize, symbol: EigenvalueSymbol) -> usize {
    if symbol.is_imaginary() {
        n.saturating_sub(2 * k)
    } else {
        (n + 2).saturating_sub(2 * k)
    }
}

/// Build the code for `lam` by reducing F - lambda I to standard form.
pub fn construct(ctx: &FnttContext, lam: Eigenvalue) -> Result<FourierCode, CodeError> {
    let n = ctx.len();
    let p = ctx.modulus();
    let f = ctx.transform_matrix();

    let mut a = Matrix::zeros(n, n, p);
    for i in 0..n {
        for c in 0..n {
            a[(i, c)] = f[(i, c)];
        }
        a[(i, i)] = a[(i, i)] - lam.residue();
    }

    let (reduced, pivots) = a.reduced_row_echelon();
    let rank = pivots.len();
    let k = n - rank;
    if k == 0 {
        return Err(CodeError::EmptyCode {
            lambda: lam.symbol().to_string(),
        });
    }
    if pivots.iter().enumerate().any(|(i, &c)| i != c) {
        return Err(CodeError::NonStandardPivots { pivots });
    }

    let h = reduced.submatrix(0, rank, 0, n);
    let mut g = Matrix::zeros(k, n, p);
    for r in 0..k {
        for i in 0..rank {
            g[(r, i)] = -h[(i, rank + r)];
        }
        g[(r, rank + r)] = p.one();
    }

    debug_assert!(g.mul(&h.transpose()).is_zero());
    let d_bound = dmin_bound(n, k, lam.symbol());
    Ok(FourierCode {
        ctx: ctx.clone(),
        lam,
        h,
        g,
        d_bound,
        d_exact: None,
    })
}

impl FourierCode {
    pub fn context(&self) -> &FnttContext {
        &self.ctx
    }

    pub fn lambda(&self) -> Eigenvalue {
        self.lam
    }

    /// Block length n = N.
    pub fn length(&self) -> usize {
        self.ctx.len()
    }

    /// Dimension k.
    pub fn dimension(&self) -> usize {
        self.g.rows()
    }

    pub fn parity_check(&self) -> &Matrix {
        &self.h
    }

    pub fn generator(&self) -> &Matrix {
        &self.g
    }

    pub fn d_bound(&self) -> usize {
        self.d_bound
    }

    pub fn d_exact(&self) -> Option<usize> {
        self.d_exact
    }

    /// Compute (and cache) the exact minimum distance.
    pub fn compute_exact_distance(&mut self) -> Result<usize, CodeError> {
        if let Some(d) = self.d_exact {
            return Ok(d);
        }
        let d = dmin_exact(self)?;
        self.d_exact = Some(d);
        Ok(d)
    }

    /// Systematic encoding: the codeword is u G, its last k symbols equal u.
    pub fn encode(&self, message: &[u64]) -> Result<Sequence, CodeError> {
        let k = self.dimension();
        if message.len() != k {
            return Err(CodeError::MessageLength {
                expected: k,
                got: message.len(),
            });
        }
        let p = self.ctx.modulus();
        for &v in message {
            if v >= p.get() {
                return Err(CodeError::Context(FnttError::SymbolOutOfRange {
                    value: v,
                    p: p.get(),
                }));
            }
        }
        let u: Vec<_> = message.iter().map(|&v| p.residue(v)).collect();
        let word = Sequence::from_residues(self.g.left_mul(&u));
        debug_assert!(eigen::is_eigensequence(&self.ctx, &word, self.lam) || word.is_zero());
        Ok(word)
    }

    /// True when x is a codeword (an eigensequence for this lambda).
    pub fn contains(&self, x: &Sequence) -> bool {
        eigen::is_eigensequence(&self.ctx, x, self.lam)
    }

    pub fn to_document(&self) -> CodeDocument {
        CodeDocument {
            p: self.ctx.modulus().get(),
            n: self.length(),
            k: self.dimension(),
            lambda: self.lam.symbol().to_string(),
            alpha: self.ctx.alpha().value(),
            sqrt_n: self.ctx.sqrt_n().value(),
            j: self.ctx.j().map(|r| r.value()),
            h: self.h.to_rows_u64(),
            g: self.g.to_rows_u64(),
            d_bound: self.d_bound,
            d_exact: self.d_exact,
        }
    }

    /// Rebuild a code from its structured document, verifying consistency.
    pub fn from_document(doc: &CodeDocument) -> Result<FourierCode, CodeError> {
        let p = PrimeModulus::new(doc.p)
            .map_err(|_| CodeError::DocumentMismatch { field: "p" })?;
        let ctx = FnttContext::build(
            p,
            doc.n,
            ContextOptions {
                alpha: Some(doc.alpha),
                sqrt_branch: Some(doc.sqrt_n),
                j_branch: doc.j,
            },
        )?;
        let symbol: EigenvalueSymbol = doc
            .lambda
            .parse()
            .map_err(|_| CodeError::DocumentMismatch { field: "lambda" })?;
        let lam = Eigenvalue::in_context(&ctx, symbol)?;
        let mut code = construct(&ctx, lam)?;
        if code.dimension() != doc.k {
            return Err(CodeError::DocumentMismatch { field: "k" });
        }
        if code.h.to_rows_u64() != doc.h {
            return Err(CodeError::DocumentMismatch { field: "H" });
        }
        if code.g.to_rows_u64() != doc.g {
            return Err(CodeError::DocumentMismatch { field: "G" });
        }
        if code.d_bound != doc.d_bound {
            return Err(CodeError::DocumentMismatch { field: "d_bound" });
        }
        code.d_exact = doc.d_exact;
        Ok(code)
    }
}

/// Structured, self-describing form of a constructed code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDocument {
    pub p: u64,
    pub n: usize,
    pub k: usize,
    pub lambda: String,
    pub alpha: u64,
    #[serde(rename = "sqrtN")]
    pub sqrt_n: u64,
    pub j: Option<u64>,
    #[serde(rename = "H")]
    pub h: Vec<Vec<u64>>,
    #[serde(rename = "G")]
    pub g: Vec<Vec<u64>>,
    pub d_bound: usize,
    pub d_exact: Option<usize>,
}

/// Exact minimum distance by enumerating the nonzero codewords uG.
///
/// Scalar multiples share a weight, so messages are normalized projectively
/// (first nonzero symbol fixed to 1), cutting the search by a factor p-1.
pub fn dmin_exact(code: &FourierCode) -> Result<usize, CodeError> {
    let p = code.context().modulus().get();
    let n = code.length();
    let k = code.dimension();
    let size = (0..k).try_fold(1u128, |acc, _| acc.checked_mul(p as u128));
    match size {
        Some(s) if s <= 10_000_000 => {}
        _ => {
            return Err(CodeError::SearchSpaceTooLarge {
                size: size.unwrap_or(u128::MAX),
            })
        }
    }

    let g = code.generator();
    let pm = code.context().modulus();
    let mut best = n + 1;
    let mut msg = vec![pm.zero(); k];
    for lead in 0..k {
        for m in msg.iter_mut() {
            *m = pm.zero();
        }
        msg[lead] = pm.one();
        // odometer over the tail positions lead+1..k
        loop {
            let mut weight = 0usize;
            for c in 0..n {
                let mut acc = pm.zero();
                for (r, m) in msg.iter().enumerate().skip(lead) {
                    acc = acc + *m * g[(r, c)];
                }
                if !acc.is_zero() {
                    weight += 1;
                    if weight >= best {
                        break;
                    }
                }
            }
            if weight < best {
                best = weight;
            }
            let mut pos = k;
            let mut carried = true;
            while carried && pos > lead + 1 {
                pos -= 1;
                let next = msg[pos].value() + 1;
                if next < p {
                    msg[pos] = pm.residue(next);
                    carried = false;
                } else {
                    msg[pos] = pm.zero();
                }
            }
            if carried {
                break;
            }
        }
    }
    Ok(best)
}

/// True when P contains a k x k secondary-diagonal block with constant
/// entry m (m = p-1 for lambda = +-1, m = 1 for +-j), scanning every
/// k-row window of P for the pattern.
pub fn ds_check(code: &FourierCode) -> bool {
    let n = code.length();
    let k = code.dimension();
    let nk = n - k;
    if nk < k {
        return false;
    }
    let p = code.context().modulus();
    let m = if code.lambda().symbol().is_imaginary() {
        p.one()
    } else {
        -p.one()
    };
    let h = code.parity_check();
    'window: for top in 0..=(nk - k) {
        for r in 0..k {
            for c in 0..k {
                let want = if c == k - 1 - r { m } else { p.zero() };
                if h[(top + r, nk + c)] != want {
                    continue 'window;
                }
            }
        }
        return true;
    }
    false
}

/// Smallest admissible prime for block length N: N | p-1, N a quadratic
/// residue of p, and p = 1 (mod 4) when a root of -1 is required.
pub fn smallest_valid_prime(n: usize, need_j: bool) -> Result<PrimeModulus, CodeError> {
    assert!(n >= 2, "block length must be at least 2");
    let step = n as u64;
    let mut p = step + 1;
    while p <= 1_000_000 {
        if gf::is_prime(p) && p > 2 {
            let pm = PrimeModulus::new(p).expect("checked prime");
            if gf::is_valid_fntt_params(pm, step) && (!need_j || pm.has_root_of_minus_one()) {
                return Ok(pm);
            }
        }
        p += step;
    }
    Err(CodeError::NoAdmissiblePrime { n })
}

/// One (k, d_exact, d_bound) cell of the parameter table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableCell {
    pub k: usize,
    pub d_exact: usize,
    pub d_bound: usize,
}

/// Parameters of the four codes of length n over the smallest valid prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub p: u64,
    /// Cells in symbol order (+1, -1, +j, -j); None marks an empty code.
    pub cells: [Option<TableCell>; 4],
}

/// Build the parameter table for a range of block lengths.
///
/// The +-1 columns are intrinsic. The +-j columns depend on which root of
/// -1 is labeled j, so the j branch is chosen per row to make the (+j, -j)
/// multiplicities line up with the multiplicity table; if neither branch
/// does, the canonical branch is kept.
pub fn parameters_table(
    n_from: usize,
    n_to: usize,
) -> Result<Vec<TableRow>, CodeError> {
    let mut rows = Vec::new();
    for n in n_from..=n_to {
        let p = smallest_valid_prime(n, true)?;
        let ctx = FnttContext::with_defaults(p, n)?;

        let cell = |ctx: &FnttContext, sym: EigenvalueSymbol| -> Result<Option<TableCell>, CodeError> {
            let lam = Eigenvalue::in_context(ctx, sym)?;
            match construct(ctx, lam) {
                Ok(mut code) => {
                    let d = code.compute_exact_distance()?;
                    Ok(Some(TableCell {
                        k: code.dimension(),
                        d_exact: d,
                        d_bound: code.d_bound(),
                    }))
                }
                Err(CodeError::EmptyCode { .. }) => Ok(None),
                Err(e) => Err(e),
            }
        };

        let plus_one = cell(&ctx, EigenvalueSymbol::PlusOne)?;
        let minus_one = cell(&ctx, EigenvalueSymbol::MinusOne)?;
        let mut plus_j = cell(&ctx, EigenvalueSymbol::PlusJ)?;
        let mut minus_j = cell(&ctx, EigenvalueSymbol::MinusJ)?;

        let want_j = eigen::multiplicity(n, EigenvalueSymbol::PlusJ);
        let want_mj = eigen::multiplicity(n, EigenvalueSymbol::MinusJ);
        let k_of = |c: &Option<TableCell>| c.map_or(0, |c| c.k);
        if (k_of(&plus_j), k_of(&minus_j)) != (want_j, want_mj)
            && (k_of(&minus_j), k_of(&plus_j)) == (want_j, want_mj)
        {
            std::mem::swap(&mut plus_j, &mut minus_j);
        }

        rows.push(TableRow {
            n,
            p: p.get(),
            cells: [plus_one, minus_one, plus_j, minus_j],
        });
    }
    Ok(rows)
}

/// Reported (k, d) reference values per block length, in symbol order
/// (+1, -1, +j, -j); None marks an empty code. Used to flag divergence
/// between computed tables and the reference.
pub fn reference_parameters(n: usize) -> Option<[Option<(usize, usize)>; 4]> {
    let row: [Option<(usize, usize)>; 4] = match n {
        3 => [Some((1, 3)), Some((1, 3)), None, Some((1, 2))],
        4 => [Some((2, 2)), Some((1, 4)), None, Some((1, 2))],
        5 => [Some((2, 3)), Some((1, 5)), Some((1, 4)), Some((1, 4))],
        6 => [Some((2, 4)), Some((2, 4)), Some((1, 4)), Some((1, 4))],
        7 => [Some((2, 5)), Some((2, 5)), Some((1, 6)), Some((2, 4))],
        8 => [Some((3, 4)), Some((2, 4)), Some((1, 6)), Some((2, 4))],
        9 => [Some((3, 3)), Some((2, 6)), Some((2, 6)), Some((2, 6))],
        10 => [Some((3, 6)), Some((3, 6)), Some((2, 6)), Some((2, 6))],
        11 => [Some((3, 7)), Some((3, 7)), Some((2, 8)), Some((3, 6))],
        12 => [Some((4, 4)), Some((3, 6)), Some((3, 4)), Some((2, 6))],
        _ => return None,
    };
    Some(row)
}
