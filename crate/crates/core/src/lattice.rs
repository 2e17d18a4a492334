//! Flat lattice of the normal-vector matroid of a central arrangement,
//! with Möbius values, the characteristic polynomial, and the region
//! count.
//!
//! Flats are generated rank by rank: every flat of rank r+1 is the
//! closure of a rank-r flat plus one hyperplane outside it, so extending
//! each current flat by each uncovered hyperplane and deduplicating
//! enumerates the whole lattice. Closures run on the fraction-free
//! elimination engine over `i128` and retry on `BigInt` in the (guarded
//! away) event of overflow. The Möbius function follows its recursive
//! definition over the inclusion order, bottom up.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exec;
use crate::linalg::{Echelon, Overflow, Scalar};
use crate::poly::IntPolynomial;

pub const MAX_LATTICE_HYPERPLANES: usize = 40;
/// Hard cap from the bitmask representation of member sets.
pub const MAX_MEMBER_BITS: usize = 64;

/// Closed set of hyperplanes: contains every hyperplane whose normal lies
/// in the span of its members' normals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flat {
    members: u64,
    rank: usize,
}

impl Flat {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members >> index & 1 == 1
    }

    /// Member hyperplane indices, ascending.
    pub fn members(&self) -> Vec<usize> {
        (0..64).filter(|&i| self.contains(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    pub fn is_subset_of(&self, other: &Flat) -> bool {
        self.members & other.members == self.members
    }

    fn bits(&self) -> u64 {
        self.members
    }
}

/// The poset of flats, bottom first, grouped by rank and sorted within a
/// rank by member set.
#[derive(Debug, Clone)]
pub struct FlatLattice {
    flats: Vec<Flat>,
    covers: Vec<(usize, usize)>,
    mobius: Vec<i64>,
    matroid_rank: usize,
    dimension: usize,
}

impl FlatLattice {
    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a lattice always has its bottom flat
    }

    /// Cover relations as (lower, upper) flat indices.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn mobius(&self) -> &[i64] {
        &self.mobius
    }

    pub fn matroid_rank(&self) -> usize {
        self.matroid_rank
    }

    /// Ambient dimension of the arrangement this lattice came from.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn flat_index(&self, members: &[usize]) -> Option<usize> {
        let mut bits = 0u64;
        for &i in members {
            bits |= 1u64 << i;
        }
        self.flats.iter().position(|f| f.bits() == bits)
    }

    /// Number of flats at each rank, `0..=matroid_rank`.
    pub fn rank_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.matroid_rank + 1];
        for f in &self.flats {
            counts[f.rank] += 1;
        }
        counts
    }

    /// `chi(t) = t^{dim - R} * sum over flats of mu(x) t^{R - rank(x)}`
    /// where `R` is the matroid rank.
    pub fn characteristic_polynomial(&self) -> IntPolynomial {
        let r = self.matroid_rank;
        let mut coeffs = vec![BigInt::from(0); r + 1];
        for (f, &mu) in self.flats.iter().zip(&self.mobius) {
            coeffs[r - f.rank] += BigInt::from(mu);
        }
        IntPolynomial::from_coeffs(coeffs).shift_up(self.dimension - r)
    }

    /// Zaslavsky count: `(-1)^dim * chi(-1)`.
    pub fn region_count(&self) -> BigInt {
        let chi = self.characteristic_polynomial();
        let v = chi.eval_int(&BigInt::from(-1));
        if self.dimension % 2 == 0 {
            v
        } else {
            -v
        }
    }
}

fn member_bits_guard(n: usize) -> Result<()> {
    if n > MAX_MEMBER_BITS {
        return Err(Error::GuardExceeded {
            what: "hyperplane-set bit",
            limit: MAX_MEMBER_BITS,
            actual: n,
        });
    }
    Ok(())
}

/// Closure of a hyperplane subset: every hyperplane whose normal lies in
/// the rational span of the subset's normals, with its linear rank.
pub fn closure(a: &Arrangement, subset: &[usize]) -> Result<Flat> {
    member_bits_guard(a.len())?;
    for &i in subset {
        if i >= a.len() {
            return Err(Error::HyperplaneIndex {
                index: i,
                len: a.len(),
            });
        }
    }
    match closure_with::<i128>(a, subset) {
        Ok(flat) => Ok(flat),
        Err(Overflow) => Ok(closure_with::<BigInt>(a, subset).expect("BigInt never overflows")),
    }
}

fn closure_with<S: Scalar>(a: &Arrangement, subset: &[usize]) -> std::result::Result<Flat, Overflow> {
    let dim = a.dimension();
    let mut ech: Echelon<S> = Echelon::new(dim);
    let mut members = 0u64;
    for &i in subset {
        ech.insert(scalar_normal(a, i))?;
        members |= 1 << i;
    }
    for i in 0..a.len() {
        if members >> i & 1 == 0 && ech.contains(&scalar_normal::<S>(a, i))? {
            members |= 1 << i;
        }
    }
    Ok(Flat {
        members,
        rank: ech.rank(),
    })
}

fn scalar_normal<S: Scalar>(a: &Arrangement, i: usize) -> Vec<S> {
    a.hyperplanes()[i]
        .normal()
        .iter()
        .map(|&c| S::from_i8(c))
        .collect()
}

/// Builds the full flat lattice. Guarded at
/// [`MAX_LATTICE_HYPERPLANES`] hyperplanes.
pub fn build_flat_lattice(a: &Arrangement) -> Result<FlatLattice> {
    build_flat_lattice_with_limit(a, MAX_LATTICE_HYPERPLANES)
}

/// Same with an explicit hyperplane guard (raising it may be slow; the
/// hard cap is [`MAX_MEMBER_BITS`]).
pub fn build_flat_lattice_with_limit(a: &Arrangement, max_hyperplanes: usize) -> Result<FlatLattice> {
    if a.len() > max_hyperplanes {
        return Err(Error::GuardExceeded {
            what: "lattice hyperplane",
            limit: max_hyperplanes,
            actual: a.len(),
        });
    }
    member_bits_guard(a.len())?;
    let lattice = match build_with::<i128>(a) {
        Ok(l) => l,
        Err(Overflow) => build_with::<BigInt>(a).expect("BigInt never overflows"),
    };
    Ok(lattice)
}

fn build_with<S: Scalar + Send + Sync>(
    a: &Arrangement,
) -> std::result::Result<FlatLattice, Overflow> {
    let m = a.len();
    let dim = a.dimension();
    let normals: Vec<Vec<S>> = (0..m).map(|i| scalar_normal(a, i)).collect();
    let full: u64 = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };

    let mut flats: Vec<Flat> = vec![Flat { members: 0, rank: 0 }];
    let mut cover_sets: Vec<(u64, u64)> = Vec::new();
    let mut current: Vec<(u64, Echelon<S>)> = vec![(0, Echelon::new(dim))];
    let mut rank = 0usize;

    while !current.is_empty() && current[0].0 != full {
        rank += 1;
        // Each parent yields its covers: closing parent + h for one h per
        // cover is enough, because every other member of the new flat
        // produces the same closure.
        let produced: Vec<std::result::Result<Vec<(u64, Echelon<S>)>, Overflow>> =
            exec::map_slice(&current, |(set, ech)| {
                let mut children = Vec::new();
                let mut covered = *set;
                for h in 0..m {
                    if covered >> h & 1 == 1 {
                        continue;
                    }
                    let mut child_ech = ech.clone();
                    let fresh = child_ech.insert(normals[h].clone())?;
                    debug_assert!(fresh, "uncovered hyperplane must extend the flat");
                    let mut child_set = *set | (1 << h);
                    for h2 in 0..m {
                        if child_set >> h2 & 1 == 0 && child_ech.contains(&normals[h2])? {
                            child_set |= 1 << h2;
                        }
                    }
                    covered |= child_set;
                    children.push((child_set, child_ech));
                }
                Ok(children)
            });

        let mut next: HashMap<u64, Echelon<S>> = HashMap::new();
        for ((parent_set, _), result) in current.iter().zip(produced) {
            for (child_set, child_ech) in result? {
                cover_sets.push((*parent_set, child_set));
                next.entry(child_set).or_insert(child_ech);
            }
        }
        let mut next: Vec<(u64, Echelon<S>)> = next.into_iter().collect();
        next.sort_by_key(|(set, _)| *set);
        flats.extend(next.iter().map(|(set, _)| Flat {
            members: *set,
            rank,
        }));
        current = next;
    }
    let matroid_rank = flats.last().unwrap().rank;

    let index_of: HashMap<u64, usize> = flats
        .iter()
        .enumerate()
        .map(|(i, f)| (f.bits(), i))
        .collect();
    let mut covers: Vec<(usize, usize)> = cover_sets
        .into_iter()
        .map(|(p, c)| (index_of[&p], index_of[&c]))
        .collect();
    covers.sort_unstable();
    covers.dedup();

    let mobius = compute_mobius(&flats, matroid_rank);
    Ok(FlatLattice {
        flats,
        covers,
        mobius,
        matroid_rank,
        dimension: dim,
    })
}

/// `mu(bottom) = 1`; for every other flat x,
/// `mu(x) = -sum of mu(z) over flats z strictly below x`.
fn compute_mobius(flats: &[Flat], matroid_rank: usize) -> Vec<i64> {
    let mut rank_start = vec![flats.len(); matroid_rank + 2];
    for (i, f) in flats.iter().enumerate() {
        if rank_start[f.rank] > i {
            rank_start[f.rank] = i;
        }
    }
    rank_start[matroid_rank + 1] = flats.len();

    let mut mobius: Vec<i64> = vec![1];
    for r in 1..=matroid_rank {
        let lo = rank_start[r];
        let hi = rank_start[r + 1];
        let below = &flats[..lo];
        let known = &mobius[..];
        let batch: Vec<i64> = {
            let level = &flats[lo..hi];
            exec::map_slice(level, |x| {
                let mut sum = 0i64;
                for (z, &mu) in below.iter().zip(known) {
                    if z.bits() & x.bits() == z.bits() {
                        sum += mu;
                    }
                }
                -sum
            })
        };
        mobius.extend(batch);
    }
    mobius
}

/// Characteristic polynomial of the arrangement via its flat lattice.
pub fn characteristic_polynomial(a: &Arrangement) -> Result<IntPolynomial> {
    Ok(build_flat_lattice(a)?.characteristic_polynomial())
}

/// Number of regions of the arrangement complement, via Zaslavsky's
/// evaluation at -1.
pub fn region_count(a: &Arrangement) -> Result<BigInt> {
    let count = build_flat_lattice(a)?.region_count();
    debug_assert!(!count.is_negative());
    Ok(count)
}
