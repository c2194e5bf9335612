//! Hybrid minimum distance: exact span enumeration and low-weight error sweep.
//!
//! The hybrid distance is the least weight in `C* \ C₀`. When that set is
//! empty (`k = m = 0`) the code is a stabilizer state and the least nonzero
//! weight of `C₀` is used instead; both algorithms share this convention.

use serde::Serialize;

use crate::additive::{gray, AdditiveCode};
use crate::code::DerivedCodes;
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::pauli::{Pauli, PauliVector};

/// Default cap on the number of error vectors a sweep may visit.
pub const DEFAULT_SWEEP_CAP: u128 = 1_000_000_000;

/// Least weight of a word in `big \ small` (`None` if the difference is
/// empty). `small` must be a subcode of `big`.
pub fn min_weight_outside(
    big: &AdditiveCode,
    small: &AdditiveCode,
    cap: usize,
    exec: Execution,
) -> Result<Option<usize>> {
    big.check_cap(cap)?;
    let mut basis = small.generators().to_vec();
    basis.extend(big.complement_basis(small)?);
    let low = small.rank() as u32;
    let n = big.n();
    let total = 1u64 << basis.len();
    let best = par::map_reduce_range(
        exec,
        total,
        usize::MAX,
        |range| {
            let start = range.start;
            let mut best = usize::MAX;
            let it = crate::additive::SpanIter::new(n, &basis, range);
            for (offset, v) in it.enumerate() {
                if gray(start + offset as u64) >> low != 0 {
                    best = best.min(v.weight());
                }
            }
            best
        },
        usize::min,
    );
    Ok((best != usize::MAX).then_some(best))
}

/// Least nonzero weight in `code`.
pub fn min_nonzero_weight(code: &AdditiveCode, cap: usize, exec: Execution) -> Result<Option<usize>> {
    let zero = AdditiveCode::zero(code.n())?;
    min_weight_outside(code, &zero, cap, exec)
}

/// Exact hybrid distance by enumerating `C*`.
pub fn hybrid_distance_full(d: &DerivedCodes, cap: usize, exec: Execution) -> Result<usize> {
    match min_weight_outside(&d.c_star, &d.c0, cap, exec)? {
        Some(w) => Ok(w),
        None => min_nonzero_weight(&d.c0, cap, exec)?
            .ok_or_else(|| Error::Precondition("code has no nonzero words".into())),
    }
}

/// Both minima of the impurity comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Impurity {
    /// Least weight in `C₀* \ C₀`.
    pub d_code: usize,
    /// Least nonzero weight in `C₀*`.
    pub d_naive: usize,
    pub impure: bool,
}

pub fn impurity_check(d: &DerivedCodes, cap: usize, exec: Execution) -> Result<Impurity> {
    let d_naive = min_nonzero_weight(&d.c0_star, cap, exec)?
        .ok_or_else(|| Error::Precondition("normalizer is trivial".into()))?;
    let d_code = match min_weight_outside(&d.c0_star, &d.c0, cap, exec)? {
        Some(w) => w,
        None => d_naive,
    };
    Ok(Impurity {
        d_code,
        d_naive,
        impure: d_code > d_naive,
    })
}

/// Outcome of a low-weight sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub target: usize,
    /// No vector of weight `1..target` lies in `C* \ C₀`.
    pub passed: bool,
    /// A lowest-weight offending vector, when the sweep fails.
    pub witness: Option<String>,
    /// Number of vectors in the weight classes fully swept.
    pub checked: u128,
}

/// Number of Pauli vectors of weight `1..target` on `n` qubits.
pub fn sweep_size(n: usize, target: usize) -> u128 {
    let mut total = 0u128;
    let mut binom = 1u128;
    let mut pow3 = 1u128;
    for w in 1..target.min(n + 1) {
        binom = binom * (n - w + 1) as u128 / w as u128;
        pow3 *= 3;
        total = total.saturating_add(binom.saturating_mul(pow3));
    }
    total
}

struct SyndromeTables {
    n: usize,
    // anticommutation with generators of C; zero means the vector is in C*
    outer: Vec<[u64; 3]>,
    // anticommutation with generators of C0*; zero means the vector is in C0
    inner: Vec<[u128; 3]>,
    // C* = C0: every nonzero vector of C* counts
    state_mode: bool,
}

impl SyndromeTables {
    fn new(d: &DerivedCodes) -> Result<Self> {
        let n = d.n();
        let single = |q: usize, p: Pauli| PauliVector::single(n, q, p);
        let mut outer = Vec::with_capacity(n);
        let mut inner = Vec::with_capacity(n);
        for q in 0..n {
            let mut o = [0u64; 3];
            let mut i = [0u128; 3];
            for (pi, &p) in Pauli::NONTRIVIAL.iter().enumerate() {
                let v = single(q, p)?;
                for (j, g) in d.c.generators().iter().enumerate() {
                    o[pi] |= (v.anticommutes(g) as u64) << j;
                }
                for (j, g) in d.c0_star.generators().iter().enumerate() {
                    i[pi] |= (v.anticommutes(g) as u128) << j;
                }
            }
            outer.push(o);
            inner.push(i);
        }
        Ok(SyndromeTables {
            n,
            outer,
            inner,
            state_mode: d.c_star.rank() == d.c0.rank(),
        })
    }

    #[inline]
    fn violates(&self, outer: u64, inner: u128) -> bool {
        outer == 0 && (self.state_mode || inner != 0)
    }

    /// Depth-first walk over vectors with `remaining` more nontrivial
    /// positions, all after `next`. Returns the first offending support.
    fn walk(&self, next: usize, remaining: usize, outer: u64, inner: u128, picks: &mut Vec<(usize, Pauli)>) -> bool {
        if remaining == 0 {
            return self.violates(outer, inner);
        }
        for q in next..=self.n - remaining {
            for (pi, &p) in Pauli::NONTRIVIAL.iter().enumerate() {
                picks.push((q, p));
                if self.walk(q + 1, remaining - 1, outer ^ self.outer[q][pi], inner ^ self.inner[q][pi], picks) {
                    return true;
                }
                picks.pop();
            }
        }
        false
    }
}

/// Checks that no vector of weight `1..target` lies in `C* \ C₀`, using
/// syndromes against the generators of `C` (membership in `C*`) and of `C₀*`
/// (membership in `C₀`). `C*` is never enumerated.
pub fn verify_distance_sweep(
    d: &DerivedCodes,
    target: usize,
    cap: u128,
    exec: Execution,
) -> Result<SweepReport> {
    let n = d.n();
    let size = sweep_size(n, target);
    if size > cap {
        return Err(Error::Capacity {
            what: "distance sweep",
            size,
            cap,
        });
    }
    let tables = SyndromeTables::new(d)?;
    let mut checked = 0u128;
    for w in 1..target.min(n + 1) {
        let tasks: Vec<(usize, usize)> = (0..=n - w).flat_map(|q| (0..3).map(move |p| (q, p))).collect();
        let hit = par::find_map_first(exec, tasks, |(q, pi)| {
            let mut picks = vec![(q, Pauli::NONTRIVIAL[pi])];
            tables
                .walk(q + 1, w - 1, tables.outer[q][pi], tables.inner[q][pi], &mut picks)
                .then_some(picks)
        });
        if let Some(picks) = hit {
            let mut paulis = vec![Pauli::I; n];
            for (q, p) in picks {
                paulis[q] = p;
            }
            let v = PauliVector::from_paulis(&paulis)?;
            return Ok(SweepReport {
                target,
                passed: false,
                witness: Some(v.to_string()),
                checked,
            });
        }
        checked += sweep_size(n, w + 1) - sweep_size(n, w);
    }
    Ok(SweepReport {
        target,
        passed: true,
        witness: None,
        checked,
    })
}
