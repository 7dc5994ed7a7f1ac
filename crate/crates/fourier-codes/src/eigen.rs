//! Eigenvalues and eigensequences of the transform.
//!
//! The eigenvalues are the fourth roots of unity (+1, -1, +j, -j) with
//! j^2 = -1 mod p. Eigensequences for +-1 are even, for +-j odd, and any
//! sequence generates eigensequences through its even/odd parts. The
//! multiplicity table fixes the dimension of each eigenspace as a function
//! of N mod 4; which concrete residue carries which column depends on the
//! sqrt(N) and j branch choices, so ranks are always verified empirically.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::fntt::{even_part, odd_part, FnttContext, Sequence};
use crate::gf::Residue;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EigenError {
    #[error("eigenvalue {symbol} needs a root of -1, unavailable in GF({p})")]
    JUnavailable { symbol: EigenvalueSymbol, p: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EigenvalueSymbol {
    PlusOne,
    MinusOne,
    PlusJ,
    MinusJ,
}

impl EigenvalueSymbol {
    pub const ALL: [EigenvalueSymbol; 4] = [
        EigenvalueSymbol::PlusOne,
        EigenvalueSymbol::MinusOne,
        EigenvalueSymbol::PlusJ,
        EigenvalueSymbol::MinusJ,
    ];

    /// True for +-j (the odd-symmetry eigenvalues).
    pub fn is_imaginary(self) -> bool {
        matches!(self, EigenvalueSymbol::PlusJ | EigenvalueSymbol::MinusJ)
    }

    /// The other symbol of the same +-pair.
    pub fn negated(self) -> Self {
        match self {
            EigenvalueSymbol::PlusOne => EigenvalueSymbol::MinusOne,
            EigenvalueSymbol::MinusOne => EigenvalueSymbol::PlusOne,
            EigenvalueSymbol::PlusJ => EigenvalueSymbol::MinusJ,
            EigenvalueSymbol::MinusJ => EigenvalueSymbol::PlusJ,
        }
    }
}

impl fmt::Display for EigenvalueSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EigenvalueSymbol::PlusOne => "+1",
            EigenvalueSymbol::MinusOne => "-1",
            EigenvalueSymbol::PlusJ => "+j",
            EigenvalueSymbol::MinusJ => "-j",
        };
        write!(f, "{s}")
    }
}

impl FromStr for EigenvalueSymbol {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+1" | "1" => Ok(EigenvalueSymbol::PlusOne),
            "-1" => Ok(EigenvalueSymbol::MinusOne),
            "+j" | "j" => Ok(EigenvalueSymbol::PlusJ),
            "-j" => Ok(EigenvalueSymbol::MinusJ),
            other => Err(format!(
                "unknown eigenvalue {other:?} (expected one of +1, -1, +j, -j)"
            )),
        }
    }
}

/// A symbolic eigenvalue together with its concrete residue in GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Eigenvalue {
    symbol: EigenvalueSymbol,
    residue: Residue,
}

impl Eigenvalue {
    /// Resolve a symbol against a context; +-j require the context's j.
    pub fn in_context(ctx: &FnttContext, symbol: EigenvalueSymbol) -> Result<Self, EigenError> {
        let p = ctx.modulus();
        let residue = match symbol {
            EigenvalueSymbol::PlusOne => p.one(),
            EigenvalueSymbol::MinusOne => -p.one(),
            EigenvalueSymbol::PlusJ => ctx.j().ok_or(EigenError::JUnavailable {
                symbol,
                p: p.get(),
            })?,
            EigenvalueSymbol::MinusJ => -ctx.j().ok_or(EigenError::JUnavailable {
                symbol,
                p: p.get(),
            })?,
        };
        Ok(Self { symbol, residue })
    }

    pub fn symbol(self) -> EigenvalueSymbol {
        self.symbol
    }

    pub fn residue(self) -> Residue {
        self.residue
    }

    /// +1 for the even-symmetry eigenvalues, -1 for the odd ones.
    pub fn symmetry_sign(self) -> Residue {
        let one = self.residue.modulus().one();
        if self.symbol.is_imaginary() {
            -one
        } else {
            one
        }
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.symbol, self.residue)
    }
}

/// True when the spectrum of x equals lambda * x componentwise.
pub fn is_eigensequence(ctx: &FnttContext, x: &Sequence, lam: Eigenvalue) -> bool {
    let spectrum = ctx.forward(x);
    (0..x.len()).all(|i| spectrum.get(i) == lam.residue() * x.get(i))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// y = E(x) +- E(X) is an eigensequence with eigenvalue +-1.
pub fn make_even_eigensequence(ctx: &FnttContext, x: &Sequence, sign: Sign) -> Sequence {
    let ex = even_part(x);
    let exx = even_part(&ctx.forward(x));
    let entries = (0..x.len())
        .map(|i| match sign {
            Sign::Plus => ex.get(i) + exx.get(i),
            Sign::Minus => ex.get(i) - exx.get(i),
        })
        .collect();
    let y = Sequence::from_residues(entries);
    debug_assert!({
        let sym = match sign {
            Sign::Plus => EigenvalueSymbol::PlusOne,
            Sign::Minus => EigenvalueSymbol::MinusOne,
        };
        is_eigensequence(ctx, &y, Eigenvalue::in_context(ctx, sym).unwrap())
    });
    y
}

/// y = O(x) -+ j O(X) is an eigensequence with eigenvalue +-j: the minus
/// branch pairs with +j, the plus branch with -j.
pub fn make_odd_eigensequence(
    ctx: &FnttContext,
    x: &Sequence,
    sign: Sign,
) -> Result<Sequence, EigenError> {
    let sym = match sign {
        Sign::Plus => EigenvalueSymbol::PlusJ,
        Sign::Minus => EigenvalueSymbol::MinusJ,
    };
    let j = ctx.j().ok_or(EigenError::JUnavailable {
        symbol: sym,
        p: ctx.modulus().get(),
    })?;
    let ox = odd_part(x);
    let oxx = odd_part(&ctx.forward(x));
    let entries = (0..x.len())
        .map(|i| match sign {
            Sign::Plus => ox.get(i) - j * oxx.get(i),
            Sign::Minus => ox.get(i) + j * oxx.get(i),
        })
        .collect();
    let y = Sequence::from_residues(entries);
    debug_assert!(is_eigensequence(
        ctx,
        &y,
        Eigenvalue::in_context(ctx, sym).unwrap()
    ));
    Ok(y)
}

/// Eigenvalue multiplicity as a function of N = 4m + s.
///
/// Column order (+1, -1, -j, +j): s=0 -> (m+1, m, m, m-1); s=1 ->
/// (m+1, m, m, m); s=2 -> (m+1, m+1, m, m); s=3 -> (m+1, m+1, m+1, m).
pub fn multiplicity(n: usize, symbol: EigenvalueSymbol) -> usize {
    assert!(n >= 2, "block length must be at least 2");
    let m = n / 4;
    let s = n % 4;
    match symbol {
        EigenvalueSymbol::PlusOne => m + 1,
        EigenvalueSymbol::MinusOne => {
            if s >= 2 {
                m + 1
            } else {
                m
            }
        }
        EigenvalueSymbol::MinusJ => {
            if s == 3 {
                m + 1
            } else {
                m
            }
        }
        EigenvalueSymbol::PlusJ => {
            if s == 0 {
                // m >= 1 whenever n >= 4 and s == 0; saturate anyway
                m.saturating_sub(1)
            } else {
                m
            }
        }
    }
}

/// The multiplicity profile seen from the other sqrt(N) branch: negating F
/// negates every eigenvalue, so (+1, -1) swap and (+j, -j) swap.
pub fn branch_swapped_multiplicity(n: usize, symbol: EigenvalueSymbol) -> usize {
    multiplicity(n, symbol.negated())
}
