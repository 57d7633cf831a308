//! Empirical checks of the symmetric-digraph conjecture.
//!
//! The five conditions are evaluated exactly as stated, including where
//! their index ranges look off by one. The rebuild-based Kyle decision in
//! [`crate::ratanang`] is the only arbiter of whether a matrix really is a
//! Kyle graph; every report carries both verdicts and whether they agree.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{OrnatedError, Result};
use crate::graph::{ArcMatrix, OrnatedGraph};
use crate::kyle::kyle;
use crate::ostring::{canonical_interleave, OrderedString};
use crate::ratanang::{first_column_tail, first_row_tail, is_kyle, peel};

/// Default cap on the number of strings or matrices a single scan may visit.
pub const DEFAULT_BUDGET: u128 = 2_000_000;
pub const DEFAULT_MAX_ORDER: usize = 7;
pub const DEFAULT_MAX_MULT: usize = 3;

/// Non-decreasing, then non-increasing. Constant and empty sequences pass.
pub fn is_unimodal(seq: &[usize]) -> bool {
    let mut descending = false;
    for w in seq.windows(2) {
        if w[1] < w[0] {
            descending = true;
        } else if w[1] > w[0] && descending {
            return false;
        }
    }
    true
}

/// Both the out-degree and the in-degree sequence, in the given vertex
/// order, rise to a plateau and then fall.
pub fn is_symmetric_digraph(m: &ArcMatrix) -> bool {
    is_unimodal(&m.out_degrees()) && is_unimodal(&m.in_degrees())
}

/// Whether some rotation or reflection of the vertex order makes the
/// digraph symmetric.
pub fn is_symmetric_under_relabel(m: &ArcMatrix) -> bool {
    let outs = m.out_degrees();
    let ins = m.in_degrees();
    let n = outs.len();
    if n == 0 {
        return true;
    }
    for reflect in [false, true] {
        for shift in 0..n {
            let order: Vec<usize> = (0..n)
                .map(|i| {
                    let p = (i + shift) % n;
                    if reflect {
                        n - 1 - p
                    } else {
                        p
                    }
                })
                .collect();
            let o: Vec<usize> = order.iter().map(|&p| outs[p]).collect();
            let d: Vec<usize> = order.iter().map(|&p| ins[p]).collect();
            if is_unimodal(&o) && is_unimodal(&d) {
                return true;
            }
        }
    }
    false
}

/// Verdicts of the five conditions plus the rebuild oracle for one matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub m: usize,
    /// Largest entry read off row 1 and column 1 by peeling.
    pub a_l: usize,
    pub cond_i: bool,
    pub cond_ii: bool,
    pub cond_iii: bool,
    pub cond_iv: bool,
    pub cond_v: bool,
    pub is_symmetric: bool,
    pub symmetric_under_relabel: bool,
    pub is_kyle_actual: bool,
    pub agreement: bool,
}

impl ConjectureReport {
    pub fn conditions_hold(&self) -> bool {
        self.cond_i && self.cond_ii && self.cond_iii && self.cond_iv && self.cond_v && self.is_symmetric
    }
}

/// Largest entry as determined from row 1 and column 1: the first peeled
/// part of each line is its count of positive cells.
fn peeled_max(m: &ArcMatrix) -> usize {
    let f = peel(&first_row_tail(m)).first().copied().unwrap_or(0);
    let b = peel(&first_column_tail(m)).first().copied().unwrap_or(0);
    f.max(b)
}

fn cond_i(m: &ArcMatrix, a_l: usize) -> bool {
    let order = m.order();
    order % 2 == 1 && a_l >= 1 && order == 2 * a_l + 1
}

fn cond_iii(m: &ArcMatrix) -> bool {
    let order = m.order();
    let sums: Vec<usize> = (1..order).map(|i| m.get(i, i + 1) + m.get(i + 1, i)).collect();
    sums.windows(2).all(|w| w[0] == w[1])
}

/// Row 1: `e_12 >= ... >= e_{1,h} = 1` and `e_1j = 0` for `j > h`, `h = floor(m/2)`.
fn cond_iv(m: &ArcMatrix) -> bool {
    let order = m.order();
    let h = order / 2;
    if h == 0 {
        return false;
    }
    let chain: Vec<usize> = (2..=h).map(|j| m.get(1, j)).collect();
    chain.windows(2).all(|w| w[0] >= w[1]) && m.get(1, h) == 1 && ((h + 1)..=order).all(|j| m.get(1, j) == 0)
}

/// Column 1: `e_21 = ... = e_{h-1,1} = 1` and `e_j1 = 0` for `h <= j <= m`.
fn cond_v(m: &ArcMatrix) -> bool {
    let order = m.order();
    let h = order / 2;
    (2..h).all(|j| m.get(j, 1) == 1) && (h.max(1)..=order).all(|j| m.get(j, 1) == 0)
}

pub fn check_conjecture_conditions(m: &ArcMatrix) -> ConjectureReport {
    let a_l = peeled_max(m);
    let mut report = ConjectureReport {
        m: m.order(),
        a_l,
        cond_i: cond_i(m, a_l),
        cond_ii: m.has_zero_diagonal(),
        cond_iii: cond_iii(m),
        cond_iv: cond_iv(m),
        cond_v: cond_v(m),
        is_symmetric: is_symmetric_digraph(m),
        symmetric_under_relabel: is_symmetric_under_relabel(m),
        is_kyle_actual: is_kyle(m),
        agreement: false,
    };
    report.agreement = report.conditions_hold() == report.is_kyle_actual;
    report
}

/// Worker-thread settings shared by the scans. Zero threads means rayon's
/// default.
#[derive(Debug, Clone, Copy)]
pub struct ScanOptions {
    pub threads: usize,
    pub budget: u128,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self { threads: 0, budget: DEFAULT_BUDGET }
    }
}

fn with_pool<T: Send>(threads: usize, job: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| OrnatedError::BadBounds(format!("thread pool: {e}")))?;
    Ok(pool.install(job))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NecessityRecord {
    pub string: OrderedString,
    #[serde(flatten)]
    pub report: ConjectureReport,
}

/// How often a condition held over a scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionTally {
    pub condition: String,
    pub holds: usize,
    pub fails: usize,
    /// `"all"`, `"some"` or `"none"`.
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NecessitySummary {
    pub max_k: usize,
    pub max_l: usize,
    pub strings_scanned: usize,
    pub conditions: Vec<ConditionTally>,
    pub kyle_actual: usize,
    pub agreements: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessityScan {
    pub records: Vec<NecessityRecord>,
    pub summary: NecessitySummary,
}

/// Number of strings with entries in `1..=max_k` and length `1..=max_l`.
pub fn necessity_space(max_k: usize, max_l: usize) -> u128 {
    (1..=max_l as u32).map(|l| (max_k as u128).saturating_pow(l)).fold(0u128, u128::saturating_add)
}

/// The `index`-th string of length `len` in lexicographic order.
fn nth_string(max_k: usize, len: usize, mut index: u128) -> OrderedString {
    let mut entries = vec![0; len];
    for slot in entries.iter_mut().rev() {
        *slot = (index % max_k as u128) as usize + 1;
        index /= max_k as u128;
    }
    OrderedString::new(entries)
}

/// Builds the Kyle graph of every string with entries in `1..=max_k` and
/// length up to `max_l` and checks the conditions on it. Records come out
/// ordered by length, then lexicographically.
pub fn scan_necessity(max_k: usize, max_l: usize, opts: ScanOptions) -> Result<NecessityScan> {
    if max_k == 0 || max_l == 0 {
        return Err(OrnatedError::BadBounds("max_k and max_l must be at least 1".into()));
    }
    let required = necessity_space(max_k, max_l);
    if required > opts.budget {
        return Err(OrnatedError::Budget { required, budget: opts.budget });
    }
    let jobs: Vec<(usize, u128)> =
        (1..=max_l).flat_map(|len| (0..(max_k as u128).pow(len as u32)).map(move |i| (len, i))).collect();
    let records: Vec<NecessityRecord> = with_pool(opts.threads, || {
        jobs.par_iter()
            .map(|&(len, i)| {
                let string = nth_string(max_k, len, i);
                let report = check_conjecture_conditions(kyle(&string).arcs());
                NecessityRecord { string, report }
            })
            .collect()
    })?;
    let summary = summarize(max_k, max_l, &records);
    Ok(NecessityScan { records, summary })
}

fn summarize(max_k: usize, max_l: usize, records: &[NecessityRecord]) -> NecessitySummary {
    let total = records.len();
    let tally = |name: &str, pick: fn(&ConjectureReport) -> bool| {
        let holds = records.iter().filter(|r| pick(&r.report)).count();
        let verdict = match holds {
            h if h == total => "all",
            0 => "none",
            _ => "some",
        };
        ConditionTally { condition: name.into(), holds, fails: total - holds, verdict: verdict.into() }
    };
    let conditions = vec![
        tally("i", |r| r.cond_i),
        tally("ii", |r| r.cond_ii),
        tally("iii", |r| r.cond_iii),
        tally("iv", |r| r.cond_iv),
        tally("v", |r| r.cond_v),
        tally("symmetric", |r| r.is_symmetric),
        tally("all_conditions", ConjectureReport::conditions_hold),
    ];
    NecessitySummary {
        max_k,
        max_l,
        strings_scanned: total,
        conditions,
        kyle_actual: records.iter().filter(|r| r.report.is_kyle_actual).count(),
        agreements: records.iter().filter(|r| r.report.agreement).count(),
    }
}

/// Which part of the candidate space a sufficiency search covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Every matrix satisfying the literal conditions plus every matrix
    /// rebuilt from a pair of row-1/column-1 staircases.
    Full,
    /// Only matrices rebuilt from staircase pairs.
    OrnatedOnly,
}

#[derive(Debug, Clone, Copy)]
pub struct SufficiencyOptions {
    pub mode: SearchMode,
    pub max_order: usize,
    pub max_mult_cap: usize,
    pub scan: ScanOptions,
}

impl Default for SufficiencyOptions {
    fn default() -> Self {
        Self {
            mode: SearchMode::Full,
            max_order: DEFAULT_MAX_ORDER,
            max_mult_cap: DEFAULT_MAX_MULT,
            scan: ScanOptions::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub matrix: Vec<Vec<usize>>,
    #[serde(flatten)]
    pub report: ConjectureReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SufficiencySummary {
    pub m: usize,
    pub max_mult: usize,
    pub mode: String,
    /// Matrices whose conditions were fully evaluated.
    pub examined: u128,
    /// Row-1/column-1 prefixes discarded before filling the interior.
    pub pruned_prefixes: u128,
    pub candidates: usize,
    pub conditions_hold_but_not_kyle: usize,
    pub kyle_but_conditions_fail: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SufficiencySearch {
    pub candidates: Vec<Candidate>,
    pub summary: SufficiencySummary,
}

/// Multisets of size at most `max_size` over `1..=max_value`, each listed
/// in non-increasing order.
fn bounded_multisets(max_value: usize, max_size: usize) -> Vec<Vec<usize>> {
    fn grow(top: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if left == 0 {
            return;
        }
        for v in (1..=top).rev() {
            cur.push(v);
            grow(v, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    grow(max_value, max_size, &mut Vec::new(), &mut out);
    out
}

/// Non-increasing sequences of length `len` over `0..=max_value`.
fn staircases(len: usize, max_value: usize) -> Vec<Vec<usize>> {
    fn grow(len: usize, top: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in (0..=top).rev() {
            cur.push(v);
            grow(len, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    grow(len, max_value, &mut Vec::new(), &mut out);
    out
}

/// Looks for disagreements between the literal conditions and the rebuild
/// oracle among matrices of odd order `m` with entries in `0..=max_mult`.
///
/// A disagreement is either a matrix meeting all conditions (and the
/// symmetry requirement) that is not a Kyle graph, or a Kyle graph that
/// fails a condition. Kyle graphs of order `m` are exactly the rebuilds of
/// row-1/column-1 staircase pairs, so those are enumerated directly; the
/// other side only needs matrices whose row 1 and column 1 already meet
/// conditions (i), (iv) and (v), and only those prefixes get an interior.
pub fn search_sufficiency(m: usize, max_mult: usize, opts: SufficiencyOptions) -> Result<SufficiencySearch> {
    if m.is_multiple_of(2) {
        return Err(OrnatedError::BadBounds(format!("order must be odd, got {m}")));
    }
    if m > opts.max_order {
        return Err(OrnatedError::BadBounds(format!("order {m} exceeds the cap {}", opts.max_order)));
    }
    if max_mult > opts.max_mult_cap {
        return Err(OrnatedError::BadBounds(format!(
            "multiplicity {max_mult} exceeds the cap {}",
            opts.max_mult_cap
        )));
    }

    let mut found: BTreeMap<Vec<Vec<usize>>, ConjectureReport> = BTreeMap::new();
    let mut examined: u128 = 0;
    let mut pruned: u128 = 0;

    // staircase pairs: forward/backward multisets with parts below m
    let sides = bounded_multisets(m.saturating_sub(1).max(1), max_mult);
    let pairs: Vec<(usize, usize)> =
        (0..sides.len()).flat_map(|f| (0..sides.len()).map(move |b| (f, b))).collect();
    let pair_count = pairs.len() as u128;
    if pair_count > opts.scan.budget {
        return Err(OrnatedError::Budget { required: pair_count, budget: opts.scan.budget });
    }
    let ornated: Vec<(Vec<Vec<usize>>, ConjectureReport)> = with_pool(opts.scan.threads, || {
        pairs
            .par_iter()
            .filter_map(|&(f, b)| {
                let s = canonical_interleave(&sides[f], &sides[b]);
                let g = OrnatedGraph::build(m, &s).expect("m >= 1");
                let report = check_conjecture_conditions(g.arcs());
                (!report.agreement).then(|| (g.arcs().rows(), report))
            })
            .collect()
    })?;
    examined += pair_count;
    found.extend(ornated);

    if opts.mode == SearchMode::Full {
        let (hits, seen, skipped) = literal_side(m, max_mult, opts.scan)?;
        examined += seen;
        pruned += skipped;
        found.extend(hits);
    }

    let candidates: Vec<Candidate> =
        found.into_iter().map(|(matrix, report)| Candidate { matrix, report }).collect();
    let summary = SufficiencySummary {
        m,
        max_mult,
        mode: match opts.mode {
            SearchMode::Full => "full".into(),
            SearchMode::OrnatedOnly => "ornated-only".into(),
        },
        examined,
        pruned_prefixes: pruned,
        candidates: candidates.len(),
        conditions_hold_but_not_kyle: candidates.iter().filter(|c| !c.report.is_kyle_actual).count(),
        kyle_but_conditions_fail: candidates.iter().filter(|c| c.report.is_kyle_actual).count(),
    };
    Ok(SufficiencySearch { candidates, summary })
}

type Hits = Vec<(Vec<Vec<usize>>, ConjectureReport)>;

/// Matrices meeting every literal condition: row 1 and column 1 are fixed
/// first and checked against (i), (iv), (v); survivors get every interior
/// filling with constant adjacent-pair sums.
fn literal_side(m: usize, max_mult: usize, scan: ScanOptions) -> Result<(Hits, u128, u128)> {
    let tails = staircases(m - 1, max_mult);
    let mut prefixes = Vec::new();
    let mut pruned: u128 = 0;
    for row in &tails {
        for col in &tails {
            let mut head = ArcMatrix::zeros(m);
            for (d, (&r, &c)) in row.iter().zip(col).enumerate() {
                head.set(1, d + 2, r);
                head.set(d + 2, 1, c);
            }
            if cond_i(&head, peeled_max(&head)) && cond_iv(&head) && cond_v(&head) {
                prefixes.push(head);
            } else {
                pruned += 1;
            }
        }
    }

    // cells outside row 1 / column 1 / the diagonal
    let adjacent: Vec<usize> = (2..m).collect();
    let free: Vec<(usize, usize)> = (2..=m)
        .flat_map(|i| (2..=m).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && i.abs_diff(j) != 1)
        .collect();
    let per_prefix = (max_mult as u128 + 1).saturating_pow((free.len() + adjacent.len()) as u32);
    let required = per_prefix.saturating_mul(prefixes.len() as u128);
    if required > scan.budget {
        return Err(OrnatedError::Budget { required, budget: scan.budget });
    }

    let hits: Hits = with_pool(scan.threads, || {
        prefixes
            .par_iter()
            .flat_map_iter(|head| {
                let pair_sum = head.get(1, 2) + head.get(2, 1);
                let mut out = Vec::new();
                let slots = adjacent.len() + free.len();
                let mut digits = vec![0usize; slots];
                loop {
                    let mut mat = head.clone();
                    let mut ok = true;
                    for (k, &i) in adjacent.iter().enumerate() {
                        let up = digits[k];
                        match pair_sum.checked_sub(up) {
                            Some(down) if down <= max_mult => {
                                mat.set(i, i + 1, up);
                                mat.set(i + 1, i, down);
                            }
                            _ => ok = false,
                        }
                    }
                    if ok {
                        for (k, &(i, j)) in free.iter().enumerate() {
                            mat.set(i, j, digits[adjacent.len() + k]);
                        }
                        let report = check_conjecture_conditions(&mat);
                        if !report.agreement {
                            out.push((mat.rows(), report));
                        }
                    }
                    if !odometer(&mut digits, max_mult) {
                        break;
                    }
                }
                out
            })
            .collect()
    })?;
    Ok((hits, required, pruned))
}

fn odometer(digits: &mut [usize], max: usize) -> bool {
    for d in digits.iter_mut() {
        if *d < max {
            *d += 1;
            return true;
        }
        *d = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> OrderedString {
        OrderedString::new(v.to_vec())
    }

    #[test]
    fn unimodal_shapes() {
        assert!(is_unimodal(&[]));
        assert!(is_unimodal(&[2, 2, 2]));
        assert!(is_unimodal(&[1, 2, 3, 4, 4, 4, 3]));
        assert!(is_unimodal(&[5, 4, 1]));
        assert!(!is_unimodal(&[1, 3, 1, 3]));
        assert!(!is_unimodal(&[2, 1, 2]));
    }

    #[test]
    fn kyle_one_three_is_symmetric() {
        let g = kyle(&s(&[1, 3]));
        assert_eq!(g.arcs().out_degrees(), vec![1, 2, 3, 4, 4, 4, 3]);
        assert_eq!(g.arcs().in_degrees(), vec![3, 4, 4, 4, 3, 2, 1]);
        assert!(is_symmetric_digraph(g.arcs()));
        assert!(is_symmetric_digraph(&ArcMatrix::zeros(4)));
    }

    #[test]
    fn zigzag_out_degrees_are_not_symmetric() {
        // out-degrees 1,3,1,3
        let m = ArcMatrix::from_rows(vec![
            vec![0, 1, 0, 0],
            vec![1, 0, 1, 1],
            vec![0, 1, 0, 0],
            vec![1, 1, 1, 0],
        ])
        .unwrap();
        assert_eq!(m.out_degrees(), vec![1, 3, 1, 3]);
        assert!(!is_symmetric_digraph(&m));
    }

    #[test]
    fn relabelling_can_restore_symmetry() {
        // out 2,0,1 dips in the middle; starting the order at v2 gives
        // out 0,1,2 and in 2,1,0
        let m = ArcMatrix::from_rows(vec![vec![0, 1, 1], vec![0, 0, 0], vec![0, 1, 0]]).unwrap();
        assert_eq!(m.out_degrees(), vec![2, 0, 1]);
        assert!(!is_symmetric_digraph(&m));
        assert!(is_symmetric_under_relabel(&m));
    }

    #[test]
    fn kyle_one_three_literal_conditions() {
        let r = check_conjecture_conditions(kyle(&s(&[1, 3])).arcs());
        assert_eq!(r.m, 7);
        assert_eq!(r.a_l, 3);
        assert!(r.cond_i && r.cond_ii && r.cond_iii);
        assert!(!r.cond_iv, "e_13 = 0 but the condition asks for e_13 = 1");
        assert!(!r.cond_v);
        assert!(r.is_symmetric && r.is_kyle_actual);
        assert!(!r.agreement);
    }

    #[test]
    fn zero_matrix_conditions() {
        let r = check_conjecture_conditions(&ArcMatrix::zeros(5));
        assert!(r.cond_ii);
        assert!(!r.cond_i);
        assert!(!r.is_kyle_actual);
        assert!(r.agreement);
    }

    #[test]
    fn kyle_two_two_pair_sums() {
        let g = kyle(&s(&[2, 2]));
        let r = check_conjecture_conditions(g.arcs());
        assert!(r.cond_ii && r.cond_iii);
        for i in 1..g.order() {
            assert_eq!(g.arcs().get(i, i + 1) + g.arcs().get(i + 1, i), 2);
        }
    }

    #[test]
    fn agreement_invariant_holds() {
        for v in [vec![1], vec![2, 1], vec![3, 3, 1], vec![1, 2, 3, 4]] {
            let r = check_conjecture_conditions(kyle(&s(&v)).arcs());
            assert_eq!(r.agreement, r.conditions_hold() == r.is_kyle_actual);
        }
    }

    #[test]
    fn necessity_counts() {
        assert_eq!(necessity_space(3, 2), 12);
        let scan = scan_necessity(3, 2, ScanOptions::default()).unwrap();
        assert_eq!(scan.records.len(), 12);
        assert_eq!(scan.records[0].string, s(&[1]));
        assert_eq!(scan.records[3].string, s(&[1, 1]));
        assert_eq!(scan.records[11].string, s(&[3, 3]));
        assert!(scan.records.iter().all(|r| r.report.is_kyle_actual));

        let tiny = scan_necessity(1, 1, ScanOptions::default()).unwrap();
        assert_eq!(tiny.records.len(), 1);
        assert_eq!(tiny.records[0].report.m, 3);
    }

    #[test]
    fn necessity_bounds_and_budget() {
        assert!(matches!(scan_necessity(0, 2, ScanOptions::default()), Err(OrnatedError::BadBounds(_))));
        let tight = ScanOptions { threads: 1, budget: 10 };
        assert!(matches!(scan_necessity(3, 2, tight), Err(OrnatedError::Budget { required: 12, .. })));
    }

    #[test]
    fn necessity_is_thread_count_independent() {
        let one = scan_necessity(3, 3, ScanOptions { threads: 1, ..Default::default() }).unwrap();
        let four = scan_necessity(3, 3, ScanOptions { threads: 4, ..Default::default() }).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn multiset_and_staircase_generators() {
        // sizes 0..=2 over {1,2}: [], [2], [2,2], [2,1], [1], [1,1]
        assert_eq!(bounded_multisets(2, 2).len(), 6);
        // non-increasing length-2 sequences over 0..=2: C(4,2) = 6
        assert_eq!(staircases(2, 2).len(), 6);
        assert!(staircases(3, 1).iter().all(|v| v.windows(2).all(|w| w[0] >= w[1])));
    }

    #[test]
    fn sufficiency_order_three() {
        let out = search_sufficiency(3, 1, SufficiencyOptions::default()).unwrap();
        assert!(!out.candidates.is_empty());
        for c in &out.candidates {
            let m = ArcMatrix::from_rows(c.matrix.clone()).unwrap();
            assert_eq!(check_conjecture_conditions(&m), c.report);
            assert_eq!(is_kyle(&m), c.report.is_kyle_actual);
            assert!(!c.report.agreement);
        }
        let mut sorted = out.candidates.clone();
        sorted.sort_by(|a, b| a.matrix.cmp(&b.matrix));
        assert_eq!(sorted, out.candidates);
    }

    #[test]
    fn sufficiency_finds_kyle_one_three() {
        let opts = SufficiencyOptions { mode: SearchMode::OrnatedOnly, ..Default::default() };
        let out = search_sufficiency(7, 1, opts).unwrap();
        let target = kyle(&s(&[1, 3])).arcs().rows();
        let hit = out.candidates.iter().find(|c| c.matrix == target).expect("kyle((1,3)) flagged");
        assert!(hit.report.is_kyle_actual && !hit.report.cond_iv);
    }

    #[test]
    fn sufficiency_full_mode_is_deterministic() {
        let a = search_sufficiency(5, 2, SufficiencyOptions::default()).unwrap();
        let opts = SufficiencyOptions {
            scan: ScanOptions { threads: 3, ..Default::default() },
            ..Default::default()
        };
        let b = search_sufficiency(5, 2, opts).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sufficiency_rejects_bad_bounds() {
        let d = SufficiencyOptions::default();
        assert!(matches!(search_sufficiency(4, 1, d), Err(OrnatedError::BadBounds(_))));
        assert!(matches!(search_sufficiency(9, 1, d), Err(OrnatedError::BadBounds(_))));
        assert!(matches!(search_sufficiency(5, 4, d), Err(OrnatedError::BadBounds(_))));
        let tight = SufficiencyOptions { scan: ScanOptions { threads: 1, budget: 3 }, ..d };
        assert!(matches!(search_sufficiency(5, 1, tight), Err(OrnatedError::Budget { .. })));
    }

    #[test]
    fn kyle_graphs_are_symmetric_exhaustively() {
        for len in 1..=4u32 {
            for i in 0..5u128.pow(len) {
                let st = nth_string(5, len as usize, i);
                assert!(is_symmetric_digraph(kyle(&st).arcs()), "{st}");
            }
        }
    }
}
