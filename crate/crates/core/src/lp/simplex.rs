//! Exact integer feasibility by dual simplex on a fraction-free tableau,
//! with depth-first branch-and-bound.
//!
//! The tableau stores integers `T` and a common denominator `D` such that the
//! true tableau is `T / D` (Bareiss-style updates keep every division exact).
//! All constraints are `a·x ≤ b` (or `=`) with `x ≥ 0`. Every structural
//! variable has a distinct positive cost, so the initial slack basis is dual
//! feasible; the dual simplex then decides feasibility, falling back to
//! Bland's rule after a run of degenerate pivots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::lattice::lattice_forms;

/// `coeffs · x ≤ rhs` (or `= rhs` when `equality`) over the structural
/// variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub coeffs: Vec<BigInt>,
    pub rhs: BigInt,
    pub equality: bool,
}

/// A linear form `coeffs · x / scale` required to be an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralForm {
    pub coeffs: Vec<BigInt>,
    pub scale: BigInt,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub pivots: u64,
    pub nodes: u64,
    pub max_depth: usize,
}

/// Consecutive degenerate pivots tolerated before switching to Bland's rule.
const DEGENERATE_LIMIT: u32 = 50;

/// Dictionary form: row `i` reads `d·x_{basis[i]} + Σ_j rows[i][j]·x_{nonbasic[j]} = rhs[i]`.
/// Variables `0..nvars` are structural, the rest are row slacks.
#[derive(Debug, Clone)]
struct Tableau {
    rows: Vec<Vec<BigInt>>,
    rhs: Vec<BigInt>,
    /// Reduced costs, scaled by `d`; nonnegative throughout (dual feasible).
    cost: Vec<BigInt>,
    basis: Vec<usize>,
    nonbasic: Vec<usize>,
    /// Rows whose slack is fixed at zero (equalities).
    fixed: Vec<bool>,
    d: BigInt,
    nvars: usize,
}

impl Tableau {
    fn new(nvars: usize, constraints: &[Row]) -> Self {
        let m = constraints.len();
        // distinct positive costs keep the dual away from degeneracy
        let cost = (1..=nvars).map(BigInt::from).collect();
        Tableau {
            rows: constraints.iter().map(|c| c.coeffs.clone()).collect(),
            rhs: constraints.iter().map(|c| c.rhs.clone()).collect(),
            cost,
            basis: (nvars..nvars + m).collect(),
            nonbasic: (0..nvars).collect(),
            fixed: constraints.iter().map(|c| c.equality).collect(),
            d: BigInt::from(1),
            nvars,
        }
    }

    fn pivot(&mut self, r: usize, s: usize) {
        let p = self.rows[r][s].clone();
        let mut pivot_row = std::mem::take(&mut self.rows[r]);
        let pivot_rhs = self.rhs[r].clone();
        let d = &self.d;
        let update = |row: &mut Vec<BigInt>, rhs: &mut BigInt| {
            let f = std::mem::take(&mut row[s]);
            if f.is_zero() {
                for x in row.iter_mut() {
                    if !x.is_zero() {
                        *x = &*x * &p / d;
                    }
                }
                *rhs = &*rhs * &p / d;
            } else {
                for (j, (x, y)) in row.iter_mut().zip(&pivot_row).enumerate() {
                    if j != s {
                        *x = (&*x * &p - &f * y) / d;
                    }
                }
                *rhs = (&*rhs * &p - &f * &pivot_rhs) / d;
                row[s] = -f;
            }
        };
        for (i, (row, rhs)) in self.rows.iter_mut().zip(self.rhs.iter_mut()).enumerate() {
            if i != r {
                update(row, rhs);
            }
        }
        let mut objective = BigInt::zero();
        update(&mut self.cost, &mut objective);
        pivot_row[s] = d.clone();
        self.rows[r] = pivot_row;
        if p.is_negative() {
            for row in self.rows.iter_mut().chain(std::iter::once(&mut self.cost)) {
                for x in row.iter_mut() {
                    *x = -&*x;
                }
            }
            for x in &mut self.rhs {
                *x = -&*x;
            }
        }
        self.d = p.abs();
        std::mem::swap(&mut self.basis[r], &mut self.nonbasic[s]);
    }

    /// Removes nonbasic column `s`; used once a fixed slack leaves the basis.
    fn drop_column(&mut self, s: usize) {
        for row in &mut self.rows {
            row.remove(s);
        }
        self.cost.remove(s);
        self.nonbasic.remove(s);
    }

    /// How far row `i` is from feasibility, or `None` if it is feasible.
    fn infeasibility(&self, i: usize) -> Option<BigInt> {
        let v = &self.rhs[i];
        if v.is_negative() {
            Some(-v)
        } else if self.fixed[i] && v.is_positive() {
            Some(v.clone())
        } else {
            None
        }
    }

    /// Dual simplex: the most infeasible row leaves, the ratio test picks the
    /// entering column; after a run of degenerate pivots, Bland's rule takes
    /// over for the rest of the solve. Returns false when infeasible.
    fn dual_simplex(&mut self, stats: &mut SolveStats) -> bool {
        let mut degenerate = 0u32;
        loop {
            let bland = degenerate >= DEGENERATE_LIMIT;
            let mut leaving: Option<(usize, BigInt)> = None;
            for i in 0..self.rows.len() {
                if let Some(v) = self.infeasibility(i) {
                    let better = match &leaving {
                        None => true,
                        Some((l, _)) if bland => self.basis[i] < self.basis[*l],
                        Some((l, w)) => v > *w || (v == *w && self.basis[i] < self.basis[*l]),
                    };
                    if better {
                        leaving = Some((i, v));
                    }
                }
            }
            let Some((r, _)) = leaving else { return true };
            // decreasing the basic variable needs positive entries
            let sign = if self.rhs[r].is_negative() { -1 } else { 1 };
            let row = &self.rows[r];
            let mut entering: Option<usize> = None;
            for (j, t) in row.iter().enumerate() {
                if t.is_zero() || t.is_negative() != (sign < 0) {
                    continue;
                }
                let better = match entering {
                    None => true,
                    Some(e) => {
                        let lhs = &self.cost[j] * row[e].abs();
                        let rhs = &self.cost[e] * t.abs();
                        lhs < rhs || (lhs == rhs && self.nonbasic[j] < self.nonbasic[e])
                    }
                };
                if better {
                    entering = Some(j);
                }
            }
            let Some(s) = entering else { return false };
            if self.cost[s].is_zero() {
                degenerate += 1;
            } else if !bland {
                degenerate = 0;
            }
            let was_fixed = self.fixed[r];
            self.pivot(r, s);
            stats.pivots += 1;
            if was_fixed {
                self.drop_column(s);
                self.fixed[r] = false;
            }
        }
    }

    /// Appends `coeffs · x ≤ rhs`, expressed in the current basis.
    fn add_row(&mut self, coeffs: &[BigInt], rhs: &BigInt) {
        let mut row: Vec<BigInt> = self
            .nonbasic
            .iter()
            .map(|&v| if v < self.nvars { &self.d * &coeffs[v] } else { BigInt::zero() })
            .collect();
        let mut b = &self.d * rhs;
        for (i, &bv) in self.basis.iter().enumerate() {
            if bv < self.nvars && !coeffs[bv].is_zero() {
                let c = &coeffs[bv];
                for (x, y) in row.iter_mut().zip(&self.rows[i]) {
                    if !y.is_zero() {
                        *x -= c * y;
                    }
                }
                b -= c * &self.rhs[i];
            }
        }
        let id = self.nvars + self.rows.len();
        self.rows.push(row);
        self.rhs.push(b);
        self.basis.push(id);
        self.fixed.push(false);
    }

    /// Current values of the structural variables, scaled by `d`.
    fn scaled_point(&self) -> Vec<BigInt> {
        let mut x = vec![BigInt::zero(); self.nvars];
        for (i, &bv) in self.basis.iter().enumerate() {
            if bv < self.nvars {
                x[bv] = self.rhs[i].clone();
            }
        }
        x
    }
}

enum Branch {
    Integral,
    Split { coeffs: Vec<BigInt>, floor: BigInt, ceil: BigInt },
}

/// A fractional coordinate of the complement block if there is one (these
/// are constant on the equality subspace, so a split settles them at once),
/// otherwise the last fractional kernel coordinate. The kernel basis is
/// LLL-reduced and its last vectors are the longest, so their coordinates
/// take the fewest values over the polytope.
fn choose_branch(t: &Tableau, lattice: &Lattice) -> Branch {
    let x = t.scaled_point();
    let fractional = |f: &IntegralForm| {
        let value: BigInt = f.coeffs.iter().zip(&x).map(|(c, v)| c * v).sum();
        let den = &f.scale * &t.d;
        (!value.is_multiple_of(&den)).then(|| value.div_floor(&den))
    };
    let (complement, kernel) = lattice.forms.split_at(lattice.complement);
    let pick = complement
        .iter()
        .find_map(|f| fractional(f).map(|q| (f, q)))
        .or_else(|| kernel.iter().rev().find_map(|f| fractional(f).map(|q| (f, q))));
    match pick {
        None => Branch::Integral,
        Some((f, q)) => Branch::Split {
            coeffs: f.coeffs.clone(),
            floor: &q * &f.scale,
            ceil: (&q + 1) * &f.scale,
        },
    }
}

struct Lattice {
    forms: Vec<IntegralForm>,
    complement: usize,
}

/// Finds a nonnegative integer `x` with `row.coeffs · x ≤ row.rhs` for every
/// row and every form integral, or proves none exists. Deterministic.
///
/// Integer points satisfying all forms make up a lattice; the search branches
/// on coordinates in a basis of that lattice adapted to the equality rows, so
/// each split respects every congruence at once. Depth-first, down branch
/// first.
pub fn integer_feasible(
    nvars: usize,
    rows: &[Row],
    forms: &[IntegralForm],
    stats: &mut SolveStats,
) -> Option<Vec<BigInt>> {
    let equalities: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.equality).map(|r| r.coeffs.clone()).collect();
    let (forms, complement) = lattice_forms(nvars, forms, &equalities);
    let lattice = Lattice { forms, complement };
    let mut stack = vec![(Tableau::new(nvars, rows), 0usize)];
    while let Some((mut t, depth)) = stack.pop() {
        stats.nodes += 1;
        stats.max_depth = stats.max_depth.max(depth);
        if !t.dual_simplex(stats) {
            continue;
        }
        match choose_branch(&t, &lattice) {
            Branch::Integral => {
                return Some(t.scaled_point().iter().map(|v| v / &t.d).collect());
            }
            Branch::Split { coeffs, floor, ceil } => {
                let mut up = t.clone();
                let neg: Vec<BigInt> = coeffs.iter().map(|c| -c).collect();
                up.add_row(&neg, &-ceil);
                t.add_row(&coeffs, &floor);
                stack.push((up, depth + 1));
                stack.push((t, depth + 1));
            }
        }
    }
    None
}

/// Feasibility of the LP relaxation, with a rational point if feasible.
pub fn relaxation_feasible(nvars: usize, rows: &[Row], stats: &mut SolveStats) -> Option<Vec<BigRational>> {
    let mut t = Tableau::new(nvars, rows);
    stats.nodes += 1;
    if !t.dual_simplex(stats) {
        return None;
    }
    Some(
        t.scaled_point()
            .into_iter()
            .map(|v| BigRational::new(v, t.d.clone()))
            .collect(),
    )
}
