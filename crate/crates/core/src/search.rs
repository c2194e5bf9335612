//! Search for hybrid codes starting from self-dual seed codes: demote
//! stabilizer generators to obtain impure codes, add translations greedily,
//! then trade translations back for logical qubits where the distance allows.

use std::collections::HashSet;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::additive::AdditiveCode;
use crate::analysis::{hybrid_distance_full, min_nonzero_weight, verify_distance_sweep};
use crate::code::{DerivedCodes, HybridCode};
use crate::constructions::build_from_code_pair;
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::pauli::{Pauli, PauliVector};

/// Rank cap for the exact distance computations done during a search.
const RANK_CAP: usize = 30;

/// Candidates tested per parallel batch in [`find_translations`].
const BATCH: usize = 256;

/// A self-dual additive code (`C₀ = C₀*`, rank `n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedCode {
    pub n: usize,
    pub generators: Vec<PauliVector>,
    pub source_id: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Exhaustive,
    Randomized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub target_d: usize,
    pub target_k: usize,
    pub max_trials: u64,
    pub rng_seed: u64,
    pub strategy: Strategy,
}

impl SearchConfig {
    pub fn check(&self) -> Result<()> {
        if self.target_d < 2 {
            return Err(Error::Precondition(format!(
                "target distance must be at least 2, found {}",
                self.target_d
            )));
        }
        Ok(())
    }
}

/// Parses the seed format: a header `n count`, then `count` blocks of `n`
/// Pauli rows. `#` starts a comment and blank lines are ignored.
pub fn parse_seeds(text: &str, source: &str) -> Result<Vec<SeedCode>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header 'n count'".into(),
    })?;
    let fields: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .ok()
        .filter(|f: &Vec<usize>| f.len() == 2)
        .ok_or_else(|| Error::Parse {
            line: hline,
            message: format!("bad header '{header}', expected 'n count'"),
        })?;
    let (n, count) = (fields[0], fields[1]);
    if n == 0 || n > crate::pauli::MAX_QUBITS {
        return Err(Error::Parse {
            line: hline,
            message: format!("length {n} outside 1..={}", crate::pauli::MAX_QUBITS),
        });
    }
    let rows: Vec<(usize, PauliVector)> = lines
        .map(|(lineno, l)| {
            let row: String = l.chars().filter(|c| !c.is_whitespace()).collect();
            crate::code::parse_row(&row, n, lineno).map(|v| (lineno, v))
        })
        .collect::<Result<_>>()?;
    if rows.len() != n * count {
        return Err(Error::Parse {
            line: rows.last().map_or(hline, |r| r.0),
            message: format!("expected {count} blocks of {n} rows, found {} rows", rows.len()),
        });
    }
    rows.chunks(n)
        .enumerate()
        .map(|(i, block)| {
            let generators: Vec<PauliVector> = block.iter().map(|r| r.1).collect();
            let code = AdditiveCode::from_generators(n, &generators)?;
            if code.rank() != n || !code.is_self_orthogonal() {
                return Err(Error::Inconsistent(format!(
                    "seed block {i} (line {}) is not self-dual: rank {}, self-orthogonal {}",
                    block[0].0,
                    code.rank(),
                    code.is_self_orthogonal()
                )));
            }
            Ok(SeedCode {
                n,
                generators,
                source_id: format!("{source}#{i}"),
            })
        })
        .collect()
}

pub fn load_seeds(path: &Path) -> Result<Vec<SeedCode>> {
    let text = std::fs::read_to_string(path)?;
    parse_seeds(&text, &path.display().to_string())
}

pub fn serialize_seeds(seeds: &[SeedCode]) -> String {
    let n = seeds.first().map_or(0, |s| s.n);
    let mut out = format!("{n} {}\n", seeds.len());
    for s in seeds {
        out.push('\n');
        for g in &s.generators {
            out.push_str(&format!("{g}\n"));
        }
    }
    out
}

/// Calls `f` on every Pauli vector of weight `1..=max_weight`.
fn for_each_low_weight(n: usize, max_weight: usize, f: &mut impl FnMut(PauliVector)) {
    fn rec(n: usize, next: usize, left: usize, x: u64, z: u64, f: &mut impl FnMut(PauliVector)) {
        if left == 0 {
            return;
        }
        for q in next..n {
            for p in Pauli::NONTRIVIAL {
                let (px, pz) = p.bits();
                let (x2, z2) = (x | (px as u64) << q, z | (pz as u64) << q);
                f(PauliVector::from_masks_unchecked(n, x2, z2));
                rec(n, q + 1, left - 1, x2, z2, f);
            }
        }
    }
    rec(n, 0, max_weight.min(n), 0, 0, f);
}

/// Pauli vectors in increasing weight, then support, then letters.
fn by_weight(n: usize, from: usize) -> impl Iterator<Item = PauliVector> {
    (from.max(1)..=n).flat_map(move |w| {
        let mut supports = Vec::new();
        let mut pick = Vec::new();
        fn subsets(n: usize, w: usize, next: usize, pick: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if pick.len() == w {
                out.push(pick.clone());
                return;
            }
            for q in next..=n - (w - pick.len()) {
                pick.push(q);
                subsets(n, w, q + 1, pick, out);
                pick.pop();
            }
        }
        subsets(n, w, 0, &mut pick, &mut supports);
        supports.into_iter().flat_map(move |support| {
            (0..3u32.pow(w as u32)).map(move |mut letters| {
                let (mut x, mut z) = (0u64, 0u64);
                for &q in &support {
                    let (px, pz) = Pauli::NONTRIVIAL[(letters % 3) as usize].bits();
                    letters /= 3;
                    x |= (px as u64) << q;
                    z |= (pz as u64) << q;
                }
                PauliVector::from_masks_unchecked(n, x, z)
            })
        })
    })
}

fn distance(d: &DerivedCodes) -> Result<usize> {
    hybrid_distance_full(d, RANK_CAP, Execution::Sequential)
}

fn demote(seed: &SeedCode, subset: &[usize]) -> Result<HybridCode> {
    let kept: Vec<PauliVector> = (0..seed.n)
        .filter(|i| !subset.contains(i))
        .map(|i| seed.generators[i])
        .collect();
    let c0 = AdditiveCode::from_generators(seed.n, &kept)?;
    let h = build_from_code_pair(&c0, &[])?;
    HybridCode::new(seed.n, 2, kept, h.logicals().to_vec(), vec![])
}

fn subsets_of(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(n: usize, k: usize, next: usize, pick: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pick.len() == k {
            out.push(pick.clone());
            return;
        }
        for i in next..=n - (k - pick.len()) {
            pick.push(i);
            rec(n, k, i + 1, pick, out);
            pick.pop();
        }
    }
    rec(n, k, 0, &mut pick, &mut out);
    out
}

/// Whether demoting `subset` gives an impure code of distance at least
/// `target_d`.
fn qualifies(seed: &SeedCode, subset: &[usize], target_d: usize) -> Result<Option<HybridCode>> {
    let h = demote(seed, subset)?;
    let d = h.validate()?;
    let dist = distance(&d)?;
    let naive = min_nonzero_weight(&d.c0, RANK_CAP, Execution::Sequential)?;
    let impure = naive.is_some_and(|w| w < dist);
    Ok((dist >= target_d && impure).then(|| h.with_claimed_d(Some(dist))))
}

/// Every `k`-subset of seed generators whose demotion gives an impure
/// `[[n, k, ≥ target_d]]` code, in lexicographic order.
pub fn impure_subsets(seed: &SeedCode, k: usize, target_d: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for s in subsets_of(seed.n, k) {
        if qualifies(seed, &s, target_d)?.is_some() {
            out.push(s);
        }
    }
    Ok(out)
}

/// Demotes `k` generators of the seed to logical status so that the result is
/// an impure code of distance at least `target_d`. Exhaustive search takes
/// the first subset in lexicographic order; randomized search samples
/// `cfg.max_trials` subsets. `k = 0` returns the seed itself.
pub fn derive_impure_seed(seed: &SeedCode, k: usize, cfg: &SearchConfig) -> Result<Option<HybridCode>> {
    if k >= seed.n {
        return Err(Error::Precondition(format!("need k < n, found k = {k}, n = {}", seed.n)));
    }
    if k == 0 {
        return Ok(Some(demote(seed, &[])?));
    }
    match cfg.strategy {
        Strategy::Exhaustive => {
            for s in subsets_of(seed.n, k) {
                if let Some(h) = qualifies(seed, &s, cfg.target_d)? {
                    return Ok(Some(h));
                }
            }
            Ok(None)
        }
        Strategy::Randomized => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
            for _ in 0..cfg.max_trials {
                let mut s = rand::seq::index::sample(&mut rng, seed.n, k).into_vec();
                s.sort_unstable();
                if let Some(h) = qualifies(seed, &s, cfg.target_d)? {
                    return Ok(Some(h));
                }
            }
            Ok(None)
        }
    }
}

/// Syndromes (against the generators of `C`) of all vectors of weight
/// `< target`, plus zero. A candidate translation keeps the distance iff its
/// syndrome is outside this set.
fn forbidden_syndromes(d: &DerivedCodes, target: usize) -> HashSet<u64> {
    let gens = d.c.generators();
    let mut set = HashSet::new();
    set.insert(0);
    for_each_low_weight(d.n(), target.saturating_sub(1), &mut |v| {
        set.insert(syndrome(gens, &v));
    });
    set
}

fn syndrome(gens: &[PauliVector], v: &PauliVector) -> u64 {
    gens.iter()
        .enumerate()
        .fold(0u64, |s, (j, g)| s | (v.anticommutes(g) as u64) << j)
}

/// Outcome of [`find_translations`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationSearch {
    pub code: HybridCode,
    /// Trial index at which each translation was accepted.
    pub accepted_at: Vec<u64>,
    pub trials: u64,
}

/// Greedily adds translation generators while every new coset keeps weight
/// at least `target_d` outside `C₀`. Candidates come in weight order
/// (exhaustive) or uniformly at random from `rng_seed` (randomized); each is
/// accepted iff the enlarged code passes the error sweep at `target_d`.
/// Within a batch the lowest accepted trial index wins, so the result does
/// not depend on the thread count.
pub fn find_translations(h: &HybridCode, cfg: &SearchConfig, exec: Execution) -> Result<TranslationSearch> {
    cfg.check()?;
    let n = h.n();
    let mut derived = h.validate()?;
    if !verify_distance_sweep(&derived, cfg.target_d, u128::MAX, exec)?.passed {
        return Err(Error::Precondition(format!(
            "input code does not reach distance {}",
            cfg.target_d
        )));
    }
    let mut code = h.clone();
    let mut accepted_at = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut ordered = by_weight(n, cfg.target_d);
    let mut next_candidate = || -> Option<PauliVector> {
        match cfg.strategy {
            Strategy::Exhaustive => ordered.next(),
            Strategy::Randomized => Some(PauliVector::from_masks_unchecked(
                n,
                rng.gen::<u64>() & mask,
                rng.gen::<u64>() & mask,
            )),
        }
    };

    let mut trial = 0u64;
    let mut pending: Vec<(u64, PauliVector)> = Vec::new();
    let mut forbidden = forbidden_syndromes(&derived, cfg.target_d);
    'outer: while trial < cfg.max_trials && derived.c.rank() > 0 {
        while pending.len() < BATCH && trial + (pending.len() as u64) < cfg.max_trials {
            match next_candidate() {
                Some(v) => pending.push((trial + pending.len() as u64, v)),
                None => break,
            }
        }
        if pending.is_empty() {
            break;
        }
        let gens = derived.c.generators().to_vec();
        let hit = par::find_map_first(exec, pending.clone(), |(i, v)| {
            (!forbidden.contains(&syndrome(&gens, &v))).then_some((i, v))
        });
        let Some((i, t)) = hit else {
            trial = pending.last().map_or(trial, |p| p.0 + 1);
            pending.clear();
            continue;
        };
        let mut translations = code.translations().to_vec();
        translations.push(t);
        let candidate = HybridCode::new(n, 2, code.stabilizer().to_vec(), code.logicals().to_vec(), translations)?;
        let cand_derived = candidate.validate()?;
        if !verify_distance_sweep(&cand_derived, cfg.target_d, u128::MAX, exec)?.passed {
            return Err(Error::Inconsistent(format!(
                "candidate {t} passed the syndrome test but failed the sweep"
            )));
        }
        code = candidate;
        derived = cand_derived;
        forbidden = forbidden_syndromes(&derived, cfg.target_d);
        accepted_at.push(i);
        pending.retain(|p| p.0 > i);
        trial = i + 1;
        if pending.is_empty() && matches!(cfg.strategy, Strategy::Exhaustive) && trial >= cfg.max_trials {
            break 'outer;
        }
    }
    let trials = trial.min(cfg.max_trials);
    Ok(TranslationSearch {
        code: code.with_claimed_d(Some(cfg.target_d)),
        accepted_at,
        trials,
    })
}

/// Turns translation generators into logical qubits while the distance stays
/// at least `target_d`: a translation `t` that commutes with every element of
/// `C₀` of weight below `target_d` becomes a logical operator, paired with a
/// demoted stabilizer. `C*` and `C` are unchanged.
pub fn promote_logicals(h: &HybridCode, target_d: usize) -> Result<HybridCode> {
    let mut code = h.clone();
    loop {
        if code.m() == 0 {
            return Ok(code);
        }
        let d = code.validate()?;
        let n = code.n();
        let mut low = Vec::new();
        for_each_low_weight(n, target_d.saturating_sub(1), &mut |v| {
            if d.c0.contains(&v).unwrap_or(false) {
                low.push(v);
            }
        });
        let commuting = d.c_star.commutant_within(&low)?;
        let Some(t) = commuting.generators().iter().find(|g| !d.c0_star.contains(g).unwrap_or(true)).copied()
        else {
            return Ok(code);
        };
        let c0 = AdditiveCode::from_generators(n, &[t])?.symplectic_dual()?.intersection(&d.c0)?;
        let normalizer = d.c0_star.extended(&[t])?;
        let translations = d.c_star.complement_basis(&normalizer)?;
        code = build_from_code_pair(&c0, &translations)?.with_claimed_d(h.claimed_d());
    }
}

/// One discovered code, as written to the JSON-lines log.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub d: usize,
    pub seed: String,
    pub code: String,
    pub rng_seed: u64,
    pub trial: u64,
}

impl SearchRecord {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

/// Runs derive → translate → promote on every seed and every qualifying
/// generator subset; returns the records sorted by decreasing `k + m`, then
/// decreasing `k`, then seed order. Every reported code has its distance
/// recomputed by full enumeration.
pub fn search(seeds: &[SeedCode], cfg: &SearchConfig, exec: Execution) -> Result<Vec<SearchRecord>> {
    cfg.check()?;
    let mut records = Vec::new();
    for seed in seeds {
        let subsets = match cfg.strategy {
            Strategy::Exhaustive => impure_subsets(seed, cfg.target_k, cfg.target_d)?,
            Strategy::Randomized => derive_impure_seed(seed, cfg.target_k, cfg)?
                .map(|h| vec![h])
                .into_iter()
                .flatten()
                .map(|h| {
                    let kept: HashSet<PauliVector> = h.stabilizer().iter().copied().collect();
                    (0..seed.n).filter(|i| !kept.contains(&seed.generators[*i])).collect()
                })
                .collect(),
        };
        if cfg.target_k == 0 && subsets.is_empty() {
            continue;
        }
        for s in subsets {
            let base = demote(seed, &s)?;
            let found = find_translations(&base, cfg, exec)?;
            let promoted = promote_logicals(&found.code, cfg.target_d)?;
            let derived = promoted.validate()?;
            let d = distance(&derived)?;
            if d < cfg.target_d {
                return Err(Error::Inconsistent(format!("search produced distance {d} below target")));
            }
            records.push(SearchRecord {
                n: promoted.n(),
                k: promoted.k(),
                m: promoted.m(),
                d,
                seed: format!("{} demote {:?}", seed.source_id, s),
                code: promoted.with_claimed_d(Some(d)).serialize(),
                rng_seed: cfg.rng_seed,
                trial: found.accepted_at.last().copied().unwrap_or(0),
            });
        }
    }
    records.sort_by_key(|r| (std::cmp::Reverse(r.k + r.m), std::cmp::Reverse(r.k)));
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn parent_seed() -> SeedCode {
        let p = catalog::printed("7_1_1_3").unwrap();
        let mut generators: Vec<PauliVector> = p.stabilizer.iter().map(|s| s.parse().unwrap()).collect();
        generators.push(p.normalizer[0].parse().unwrap());
        SeedCode {
            n: 7,
            generators,
            source_id: "parent".into(),
        }
    }

    fn cfg(strategy: Strategy, trials: u64) -> SearchConfig {
        SearchConfig {
            target_d: 3,
            target_k: 1,
            max_trials: trials,
            rng_seed: 5,
            strategy,
        }
    }

    #[test]
    fn seed_file_round_trip() {
        let text = "2 1\nXX\nZZ\n";
        let seeds = parse_seeds(text, "t").unwrap();
        assert_eq!(seeds.len(), 1);
        assert_eq!(parse_seeds(&serialize_seeds(&seeds), "t").unwrap()[0].generators, seeds[0].generators);
        assert!(matches!(parse_seeds("2 1\nXX\nZZZ\n", "t"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_seeds("2 1\nXX\nZI\n", "t"), Err(Error::Inconsistent(m)) if m.contains("block 0")));
        assert!(matches!(parse_seeds("2 2\nXX\nZZ\n", "t"), Err(Error::Parse { .. })));
    }

    #[test]
    fn weight_order_enumeration() {
        let all: Vec<PauliVector> = by_weight(3, 1).collect();
        assert_eq!(all.len(), 63);
        assert!(all.windows(2).all(|w| w[0].weight() <= w[1].weight()));
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), 63);
        let mut low = 0;
        for_each_low_weight(4, 2, &mut |_| low += 1);
        assert_eq!(low, 12 + 54);
    }

    #[test]
    fn demoting_the_normalizer_row_recovers_the_catalog_stabilizer() {
        let seed = parent_seed();
        let subsets = impure_subsets(&seed, 1, 3).unwrap();
        assert!(subsets.contains(&vec![6]));
        let h = demote(&seed, &[6]).unwrap();
        assert_eq!(h.stabilizer(), catalog::code("7_1_1_3").unwrap().stabilizer());
        let k0 = derive_impure_seed(&seed, 0, &cfg(Strategy::Exhaustive, 0)).unwrap().unwrap();
        assert_eq!((k0.k(), k0.m()), (0, 0));
    }

    #[test]
    fn translations_found_and_reproducible() {
        let base = demote(&parent_seed(), &[6]).unwrap();
        for strategy in [Strategy::Exhaustive, Strategy::Randomized] {
            let c = cfg(strategy, 10_000);
            let a = find_translations(&base, &c, Execution::Sequential).unwrap();
            let b = find_translations(&base, &c, Execution::default()).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.code.m(), 1, "{strategy:?}");
            assert!(distance(&a.code.validate().unwrap()).unwrap() >= 3);
        }
        let none = find_translations(&base, &cfg(Strategy::Randomized, 0), Execution::Sequential).unwrap();
        assert_eq!(none.code.translations(), base.translations());
    }

    #[test]
    fn promotion_keeps_distance() {
        let h = crate::constructions::qudit_to_classical(&catalog::code("9_2_2_3").unwrap()).unwrap();
        let p = promote_logicals(&h, 3).unwrap();
        assert_eq!((p.k(), p.m()), (2, 2));
        let before = h.validate().unwrap();
        let after = p.validate().unwrap();
        assert_eq!(after.c_star, before.c_star);
        assert_eq!(distance(&after).unwrap(), 3);
        let plain = catalog::code("7_1_1_3").unwrap();
        let untouched = promote_logicals(&qudit_free(&plain), 3).unwrap();
        assert_eq!(untouched.m(), 0);
    }

    fn qudit_free(h: &HybridCode) -> HybridCode {
        HybridCode::new(h.n(), 2, h.stabilizer().to_vec(), h.logicals().to_vec(), vec![]).unwrap()
    }
}
