//! Linear-programming bounds on hybrid code parameters, solved exactly.

mod lattice;
pub mod program;
pub mod simplex;
pub mod table;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

pub use program::{build_program, check_point, BoundQuery, Constraint, EnumeratorProgram, Sense};
pub use simplex::SolveStats;
pub use table::{max_m, reproduce_table1, CellStatus, Table1, TableCell};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Feasible,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    /// `A⊥_0..A⊥_n` as decimal rationals.
    pub a_perp: Vec<String>,
    /// `B⊥_0..B⊥_n` as decimal rationals.
    pub b_perp: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasibilityResult {
    pub verdict: Verdict,
    /// Satisfying point for a feasible program.
    pub certificate: Option<Certificate>,
    /// For an infeasible program: a summary of the exhausted search tree.
    pub witness: Option<String>,
    pub pivots: u64,
    pub nodes: u64,
    pub max_depth: usize,
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        self.verdict == Verdict::Feasible
    }

    /// The certificate as exact rationals `(A⊥, B⊥)`.
    pub fn point(&self) -> Option<(Vec<BigRational>, Vec<BigRational>)> {
        let c = self.certificate.as_ref()?;
        let parse = |v: &[String]| v.iter().map(|s| s.parse().ok()).collect::<Option<Vec<BigRational>>>();
        Some((parse(&c.a_perp)?, parse(&c.b_perp)?))
    }
}

/// Decides whether the program has a nonnegative integer solution with all
/// derived enumerators integral. Exact and deterministic.
pub fn ip_feasible(p: &EnumeratorProgram) -> FeasibilityResult {
    let rows = p.rows();
    let forms: Vec<_> = p.integral_forms.iter().map(|(_, f)| f.clone()).collect();
    let mut stats = SolveStats::default();
    let sol = simplex::integer_feasible(p.num_vars, &rows, &forms, &mut stats);
    let n = p.query.n;
    match sol {
        Some(x) => {
            let strs = |v: &[BigInt]| v.iter().map(|x| x.to_string()).collect();
            FeasibilityResult {
                verdict: Verdict::Feasible,
                certificate: Some(Certificate {
                    a_perp: strs(&x[..=n]),
                    b_perp: strs(&x[n + 1..]),
                }),
                witness: None,
                pivots: stats.pivots,
                nodes: stats.nodes,
                max_depth: stats.max_depth,
            }
        }
        None => FeasibilityResult {
            verdict: Verdict::Infeasible,
            certificate: None,
            witness: Some(format!(
                "branch-and-bound exhausted: {} nodes, {} pivots, depth {}",
                stats.nodes, stats.pivots, stats.max_depth
            )),
            pivots: stats.pivots,
            nodes: stats.nodes,
            max_depth: stats.max_depth,
        },
    }
}

/// Convenience: build and solve.
pub fn feasible(n: usize, k: usize, m: usize, d: usize, use_shadow: bool) -> crate::Result<FeasibilityResult> {
    Ok(ip_feasible(&build_program(BoundQuery::new(n, k, m, d, use_shadow)?)?))
}
