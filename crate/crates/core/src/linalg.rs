//! Exact rational linear algebra: rank, span membership, strict-inequality
//! feasibility, polynomial evaluation.
//!
//! Elimination is fraction-free (Bareiss): every intermediate value is a
//! minor of the input matrix, so integer growth stays within the Hadamard
//! bound. The lattice module runs the same engine over `i128` with checked
//! arithmetic and falls back to `BigInt` on overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

pub type Rat = BigRational;

pub const MAX_FM_CONSTRAINTS: usize = 16;
pub const MAX_FM_DIMENSION: usize = 5;

/// Vector of exact rationals. `BigRational` keeps fractions reduced with
/// positive denominators by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatVector {
    entries: Vec<Rat>,
}

impl RatVector {
    pub fn new(entries: Vec<Rat>) -> Self {
        RatVector { entries }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        RatVector {
            entries: values.iter().map(|&v| Rat::from(BigInt::from(v))).collect(),
        }
    }

    pub fn from_signs(values: &[i8]) -> Self {
        RatVector {
            entries: values.iter().map(|&v| Rat::from(BigInt::from(v))).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn inner(&self, other: &RatVector) -> Result<Rat> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum())
    }

    pub fn add(&self, other: &RatVector) -> Result<RatVector> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        Ok(RatVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Clears denominators: the primitive integer vector spanning the same
    /// ray (up to a positive scale).
    fn to_bigints(&self) -> Vec<BigInt> {
        let lcm = self
            .entries
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        self.entries
            .iter()
            .map(|e| e.numer() * (&lcm / e.denom()))
            .collect()
    }
}

/// Rectangular matrix of exact rationals, stored by rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: Vec<RatVector>,
    cols: usize,
}

impl RatMatrix {
    pub fn new(rows: Vec<RatVector>) -> Result<Self> {
        let cols = rows.first().map_or(0, RatVector::dim);
        for r in &rows {
            if r.dim() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    actual: r.dim(),
                });
            }
        }
        Ok(RatMatrix { rows, cols })
    }

    pub fn empty(cols: usize) -> Self {
        RatMatrix { rows: Vec::new(), cols }
    }

    pub fn rows(&self) -> &[RatVector] {
        &self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }
}

/// Rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    let mut ech: Echelon<BigInt> = Echelon::new(m.cols);
    for row in &m.rows {
        ech.insert(row.to_bigints()).expect("BigInt never overflows");
    }
    ech.rank()
}

/// Whether `v` lies in the row space of `basis`.
pub fn in_span(v: &RatVector, basis: &RatMatrix) -> Result<bool> {
    if v.dim() != basis.cols() {
        return Err(Error::DimensionMismatch {
            expected: basis.cols(),
            actual: v.dim(),
        });
    }
    let mut ech: Echelon<BigInt> = Echelon::new(basis.cols);
    for row in &basis.rows {
        ech.insert(row.to_bigints()).expect("BigInt never overflows");
    }
    Ok(ech.contains(&v.to_bigints()).expect("BigInt never overflows"))
}

/// Horner evaluation, exact.
pub fn poly_eval(p: &IntPolynomial, x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc * x + Rat::from(c.clone());
    }
    acc
}

/// Strict inequality sign: `+` means `<a, x> > 0`, `-` means `<a, x> < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn of_rat(x: &Rat) -> Option<Sign> {
        if x.is_zero() {
            None
        } else if x.is_positive() {
            Some(Sign::Plus)
        } else {
            Some(Sign::Minus)
        }
    }
}

/// Conjunction of strict homogeneous inequalities `sign * <a, x> > 0`.
#[derive(Debug, Clone)]
pub struct StrictSystem {
    constraints: Vec<(RatVector, Sign)>,
    dim: usize,
}

impl StrictSystem {
    pub fn new(constraints: Vec<(RatVector, Sign)>) -> Result<Self> {
        let dim = constraints.first().map_or(0, |(a, _)| a.dim());
        for (a, _) in &constraints {
            if a.is_zero() {
                return Err(Error::ZeroConstraint);
            }
            if a.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: a.dim(),
                });
            }
        }
        Ok(StrictSystem { constraints, dim })
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// Fourier–Motzkin feasibility for strict homogeneous systems: is there a
/// rational point satisfying every inequality?
pub fn fm_feasible(s: &StrictSystem) -> Result<bool> {
    if s.len() > MAX_FM_CONSTRAINTS {
        return Err(Error::GuardExceeded {
            what: "Fourier-Motzkin constraint",
            limit: MAX_FM_CONSTRAINTS,
            actual: s.len(),
        });
    }
    if s.dim() > MAX_FM_DIMENSION {
        return Err(Error::GuardExceeded {
            what: "Fourier-Motzkin dimension",
            limit: MAX_FM_DIMENSION,
            actual: s.dim(),
        });
    }
    // Fold signs in and clear denominators: rows mean <row, x> > 0.
    let rows: Vec<Vec<BigInt>> = s
        .constraints
        .iter()
        .map(|(a, sign)| {
            let mut v = a.to_bigints();
            if *sign == Sign::Minus {
                for x in &mut v {
                    *x = -std::mem::take(x);
                }
            }
            primitive(v)
        })
        .collect();
    Ok(eliminate(rows, (0..s.dim()).collect()))
}

/// Divides by the gcd of the entries; keeps the sign.
fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut v {
            *x = &*x / &g;
        }
    }
    v
}

fn eliminate(rows: Vec<Vec<BigInt>>, vars: Vec<usize>) -> bool {
    // "0 > 0" is unsatisfiable; derived zero rows mean the same.
    if rows.iter().any(|r| r.iter().all(Zero::is_zero)) {
        return false;
    }
    if rows.is_empty() || vars.is_empty() {
        return true;
    }
    // Eliminate the variable appearing in fewest constraints.
    let (vi, &var) = vars
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| rows.iter().filter(|r| !r[v].is_zero()).count())
        .unwrap();
    let mut remaining = vars;
    remaining.remove(vi);

    let mut keep: Vec<Vec<BigInt>> = Vec::new();
    let mut lower: Vec<Vec<BigInt>> = Vec::new();
    let mut upper: Vec<Vec<BigInt>> = Vec::new();
    for r in rows {
        if r[var].is_zero() {
            keep.push(r);
        } else if r[var].is_positive() {
            lower.push(r);
        } else {
            upper.push(r);
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    for r in &keep {
        seen.insert(r.clone());
    }
    for a in &lower {
        for b in &upper {
            // positive combination a[var]*b - b[var]*a has zero var coeff
            let combo: Vec<BigInt> = a
                .iter()
                .zip(b)
                .map(|(x, y)| &a[var] * y - &b[var] * x)
                .collect();
            let combo = primitive(combo);
            if seen.insert(combo.clone()) {
                keep.push(combo);
            }
        }
    }
    eliminate(keep, remaining)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

/// Scalar for fraction-free elimination: exact integers with an overflow
/// signal. `i128` is the fast path; `BigInt` never overflows.
pub(crate) trait Scalar: Clone + PartialEq + Zero + One {
    fn from_i8(x: i8) -> Self;
    fn checked_mul(&self, o: &Self) -> std::result::Result<Self, Overflow>;
    fn checked_sub(&self, o: &Self) -> std::result::Result<Self, Overflow>;
    /// Division known to be exact; a remainder would be a broken
    /// elimination invariant, not bad data.
    fn exact_div(&self, o: &Self) -> std::result::Result<Self, Overflow>;
}

impl Scalar for i128 {
    fn from_i8(x: i8) -> Self {
        x as i128
    }
    fn checked_mul(&self, o: &Self) -> std::result::Result<Self, Overflow> {
        i128::checked_mul(*self, *o).ok_or(Overflow)
    }
    fn checked_sub(&self, o: &Self) -> std::result::Result<Self, Overflow> {
        i128::checked_sub(*self, *o).ok_or(Overflow)
    }
    fn exact_div(&self, o: &Self) -> std::result::Result<Self, Overflow> {
        debug_assert_eq!(self % o, 0, "fraction-free division must be exact");
        i128::checked_div(*self, *o).ok_or(Overflow)
    }
}

impl Scalar for BigInt {
    fn from_i8(x: i8) -> Self {
        BigInt::from(x)
    }
    fn checked_mul(&self, o: &Self) -> std::result::Result<Self, Overflow> {
        Ok(self * o)
    }
    fn checked_sub(&self, o: &Self) -> std::result::Result<Self, Overflow> {
        Ok(self - o)
    }
    fn exact_div(&self, o: &Self) -> std::result::Result<Self, Overflow> {
        debug_assert!(Zero::is_zero(&(self % o)), "fraction-free division must be exact");
        Ok(self / o)
    }
}

/// Incremental fraction-free row basis. Each inserted row is reduced
/// against the rows already present (Bareiss two-step form), so entries
/// stay minors of the original vectors.
#[derive(Debug, Clone)]
pub(crate) struct Echelon<S> {
    rows: Vec<Vec<S>>,
    pivot_cols: Vec<usize>,
    dim: usize,
}

impl<S: Scalar> Echelon<S> {
    pub fn new(dim: usize) -> Self {
        Echelon {
            rows: Vec::new(),
            pivot_cols: Vec::new(),
            dim,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Vec<S>) -> std::result::Result<Vec<S>, Overflow> {
        debug_assert_eq!(v.len(), self.dim);
        let mut prev_pivot = S::one();
        for (row, &pc) in self.rows.iter().zip(&self.pivot_cols) {
            let coef = v[pc].clone();
            let pivot = &row[pc];
            for (x, r) in v.iter_mut().zip(row) {
                let a = pivot.checked_mul(x)?;
                let b = coef.checked_mul(r)?;
                *x = a.checked_sub(&b)?.exact_div(&prev_pivot)?;
            }
            prev_pivot = pivot.clone();
        }
        Ok(v)
    }

    /// Reduces and inserts; `Ok(false)` when `v` was already in the span.
    pub fn insert(&mut self, v: Vec<S>) -> std::result::Result<bool, Overflow> {
        let reduced = self.reduce(v)?;
        match reduced.iter().position(|x| !x.is_zero()) {
            Some(pc) => {
                self.rows.push(reduced);
                self.pivot_cols.push(pc);
                Ok(true)
            }
            None => Ok(false),
        }
    }

    pub fn contains(&self, v: &[S]) -> std::result::Result<bool, Overflow> {
        let reduced = self.reduce(v.to_vec())?;
        Ok(reduced.iter().all(S::is_zero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(v: &[i64]) -> RatVector {
        RatVector::from_integers(v)
    }

    #[test]
    fn rank_examples() {
        let m = RatMatrix::new(vec![rv(&[1, 0]), rv(&[0, 1]), rv(&[1, -1])]).unwrap();
        assert_eq!(rank(&m), 2);
        assert_eq!(rank(&RatMatrix::empty(4)), 0);
        let m = RatMatrix::new(vec![rv(&[1, -1, 0]), rv(&[0, 1, -1]), rv(&[-1, 0, 1])]).unwrap();
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn rank_handles_rationals() {
        let half = Rat::new(BigInt::from(1), BigInt::from(2));
        let third = Rat::new(BigInt::from(1), BigInt::from(3));
        let row = RatVector::new(vec![half.clone(), third.clone()]);
        let scaled = RatVector::new(vec![half * Rat::from(BigInt::from(6)),
            third * Rat::from(BigInt::from(6))]);
        let m = RatMatrix::new(vec![row, scaled]).unwrap();
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn in_span_examples() {
        let basis = RatMatrix::new(vec![rv(&[1, 0, 0]), rv(&[0, 1, 0])]).unwrap();
        assert!(in_span(&rv(&[1, -1, 0]), &basis).unwrap());
        assert!(!in_span(&rv(&[0, 0, 1]), &basis).unwrap());
        let basis = RatMatrix::new(vec![rv(&[1, -1, 0]), rv(&[0, 0, 1])]).unwrap();
        assert!(in_span(&rv(&[1, -1, 1]), &basis).unwrap());
        assert!(matches!(
            in_span(&rv(&[1, 2]), &basis),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn fm_simple_cases() {
        let sys = StrictSystem::new(vec![(rv(&[1]), Sign::Plus), (rv(&[1]), Sign::Minus)]).unwrap();
        assert!(!fm_feasible(&sys).unwrap());
        let sys = StrictSystem::new(vec![
            (rv(&[1, 0]), Sign::Plus),
            (rv(&[0, 1]), Sign::Plus),
            (rv(&[1, -1]), Sign::Plus),
        ])
        .unwrap();
        assert!(fm_feasible(&sys).unwrap());
    }

    #[test]
    fn fm_two_dimensional_case_analysis() {
        // over {x1, x2, x1-x2}: exactly (+,-,-) and (-,+,+) are empty
        let normals = [[1i64, 0], [0, 1], [1, -1]];
        let mut feasible = 0;
        for mask in 0..8u32 {
            let cons: Vec<(RatVector, Sign)> = normals
                .iter()
                .enumerate()
                .map(|(i, n)| {
                    let s = if mask >> i & 1 == 0 { Sign::Plus } else { Sign::Minus };
                    (rv(n), s)
                })
                .collect();
            let sys = StrictSystem::new(cons).unwrap();
            let ok = fm_feasible(&sys).unwrap();
            let signs: Vec<Sign> = (0..3)
                .map(|i| if mask >> i & 1 == 0 { Sign::Plus } else { Sign::Minus })
                .collect();
            let expect_empty = signs == [Sign::Plus, Sign::Minus, Sign::Minus]
                || signs == [Sign::Minus, Sign::Plus, Sign::Plus];
            assert_eq!(ok, !expect_empty, "mask {mask}");
            if ok {
                feasible += 1;
            }
        }
        assert_eq!(feasible, 6);
    }

    #[test]
    fn fm_guards() {
        let cons: Vec<(RatVector, Sign)> = (0..17).map(|_| (rv(&[1, 1]), Sign::Plus)).collect();
        assert!(matches!(
            fm_feasible(&StrictSystem::new(cons).unwrap()),
            Err(Error::GuardExceeded { .. })
        ));
        let sys = StrictSystem::new(vec![(rv(&[1, 0, 0, 0, 0, 0]), Sign::Plus)]).unwrap();
        assert!(matches!(fm_feasible(&sys), Err(Error::GuardExceeded { .. })));
        assert!(matches!(
            StrictSystem::new(vec![(rv(&[0, 0]), Sign::Plus)]),
            Err(Error::ZeroConstraint)
        ));
    }

    #[test]
    fn poly_eval_examples() {
        let p = IntPolynomial::from_integer_roots(&[1, 2]);
        assert_eq!(
            poly_eval(&p, &Rat::from(BigInt::from(-1))),
            Rat::from(BigInt::from(6))
        );
        assert_eq!(
            poly_eval(&p, &Rat::from(BigInt::from(0))),
            Rat::from(p.coeff(0))
        );
        let q = IntPolynomial::from_integer_roots(&[1, 2, 3]);
        assert_eq!(
            poly_eval(&q, &Rat::from(BigInt::from(5))),
            Rat::from(BigInt::from(24))
        );
    }

    #[test]
    fn echelon_i128_matches_bigint() {
        let vecs: Vec<Vec<i8>> = vec![
            vec![1, -1, 0, 0],
            vec![0, 1, -1, 0],
            vec![1, 0, -1, 0],
            vec![0, 0, 1, -1],
            vec![1, 0, 0, -1],
        ];
        let mut fast: Echelon<i128> = Echelon::new(4);
        let mut slow: Echelon<BigInt> = Echelon::new(4);
        for v in &vecs {
            let a = fast
                .insert(v.iter().map(|&x| x as i128).collect())
                .unwrap();
            let b = slow
                .insert(v.iter().map(|&x| BigInt::from(x)).collect())
                .unwrap();
            assert_eq!(a, b);
        }
        assert_eq!(fast.rank(), slow.rank());
        assert_eq!(fast.rank(), 3);
    }
}
