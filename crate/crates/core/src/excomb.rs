//! Weyl-group side: the W(E7)/W(E8) class tables, exact trace sequences,
//! exceptional classes of blow-ups of P^2, Carter-symbol products, twists and
//! type identification from Orbit-Trace data.

use std::collections::HashMap;

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::data;
use crate::error::{Error, Result};

/// Largest n for which trace and fixed-curve sequences are precomputed.
pub const N_MAX: usize = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Group {
    E7,
    E8,
}

impl Group {
    pub fn name(self) -> &'static str {
        match self {
            Group::E7 => "E7",
            Group::E8 => "E8",
        }
    }
    /// number of exceptional classes
    pub fn curves(self) -> u64 {
        match self {
            Group::E7 => 56,
            Group::E8 => 240,
        }
    }
    pub fn rank(self) -> usize {
        match self {
            Group::E7 => 7,
            Group::E8 => 8,
        }
    }
    pub fn records(self) -> usize {
        match self {
            Group::E7 => 60,
            Group::E8 => 112,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    #[serde(skip_deserializing, default = "default_group")]
    pub group: Group,
    pub index: usize,
    pub carter: String,
    /// (orbit size, multiplicity)
    pub orbit_type: Vec<(u32, u32)>,
    /// (N, k) meaning zeta_N^k
    pub eigenvalues: Vec<(u32, u32)>,
    pub twist: usize,
    pub trace: i64,
}

fn default_group() -> Group {
    Group::E8
}

impl ClassRecord {
    /// Order of the class (lcm of eigenvalue orders).
    pub fn order(&self) -> u32 {
        self.eigenvalues.iter().fold(1, |a, &(n, _)| lcm(a, n))
    }

    /// Orbit type as (size, multiplicity) with equal sizes merged, sorted.
    pub fn orbit_multiset(&self) -> Vec<(u32, u32)> {
        merge_orbits(self.orbit_type.iter().copied())
    }

    pub fn orbit_string(&self) -> String {
        self.orbit_multiset().iter().map(|(s, m)| format!("{s}^{m}")).collect::<Vec<_>>().join(" ")
    }
}

pub fn merge_orbits(it: impl Iterator<Item = (u32, u32)>) -> Vec<(u32, u32)> {
    let mut m: std::collections::BTreeMap<u32, u32> = Default::default();
    for (s, c) in it {
        *m.entry(s).or_default() += c;
    }
    m.into_iter().filter(|&(_, c)| c > 0).collect()
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

/// n-th cyclotomic polynomial with integer coefficients, constant first.
pub fn cyclotomic(n: u32) -> Vec<i64> {
    // x^n - 1 divided by all Phi_d, d | n, d < n
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = int_div_exact(&p, &cyclotomic(d));
        }
    }
    p
}

fn int_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        for j in 0..=db {
            r[i + j] -= c * b[j];
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

/// Reduces Σ c_e ζ_M^e modulo Φ_M; returns the integer value if the result
/// is a rational integer.
fn cyclotomic_reduce(mut c: Vec<i64>, m: u32) -> Option<i64> {
    let phi = cyclotomic(m);
    let d = phi.len() - 1;
    for i in (d..c.len()).rev() {
        let t = c[i];
        if t == 0 {
            continue;
        }
        for j in 0..=d {
            c[i - d + j] -= t * phi[j];
        }
    }
    if c.iter().skip(1).take(d.saturating_sub(1)).any(|&x| x != 0) {
        return None;
    }
    Some(c[0])
}

/// t_n = 1 + Σ λ_i^n computed exactly.
pub fn trace_sequence(rec: &ClassRecord, n_max: usize) -> Result<Vec<i64>> {
    let m = rec.order();
    let exps: Vec<u64> = rec.eigenvalues.iter().map(|&(n, k)| (k as u64) * (m / n) as u64).collect();
    (1..=n_max)
        .map(|n| {
            let mut c = vec![0i64; m as usize];
            for &e in &exps {
                c[((e * n as u64) % m as u64) as usize] += 1;
            }
            cyclotomic_reduce(c, m).map(|v| v + 1).ok_or(Error::EigenvalueInconsistent)
        })
        .collect()
}

/// F_n = Σ_{size | n} size * mult.
pub fn fixed_curve_counts(rec: &ClassRecord, n_max: usize) -> Vec<u64> {
    (1..=n_max as u32)
        .map(|n| rec.orbit_type.iter().filter(|(s, _)| n % s == 0).map(|&(s, m)| (s * m) as u64).sum())
        .collect()
}

/// Eigenvalue multiset as reduced fractions k/N in [0,1).
fn angles(ev: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let mut v: Vec<(u32, u32)> = ev
        .iter()
        .map(|&(n, k)| {
            let g = gcd(k % n, n);
            if k % n == 0 { (0, 1) } else { ((k % n) / g, n / g) }
        })
        .collect();
    v.sort();
    v
}

fn negated_angles(ev: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let neg: Vec<(u32, u32)> = ev
        .iter()
        .map(|&(n, k)| {
            // -ζ_n^k = ζ_{2n}^{2k + n}
            (2 * n, (2 * k + n) % (2 * n))
        })
        .collect();
    angles(&neg)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct H1Record {
    pub deg1_symbol: String,
    pub deg2_symbol: Option<String>,
    pub h1: String,
    pub deg1_type: usize,
    pub deg2_type: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OpenCase {
    #[serde(rename = "type")]
    pub type_index: usize,
    pub twist: usize,
    pub resolved: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OpenCases {
    pub non_minimal: Vec<OpenCase>,
    pub minimal: Vec<OpenCase>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LowerBoundRow {
    #[serde(rename = "type")]
    pub type_index: usize,
    pub q0: u64,
    pub q0_even: u64,
}

pub struct Tables {
    pub e7: Vec<ClassRecord>,
    pub e8: Vec<ClassRecord>,
    pub h1: Vec<H1Record>,
    /// E7 type -> minimal q over which a degree-2 surface of that type exists
    pub deg2_existence: HashMap<usize, u64>,
    pub deg2_default_min_q: u64,
    /// E8 type -> E7 parent types
    pub deg1_deg2: Vec<(usize, Vec<usize>)>,
    /// embedded lower-bound table (q0, q0') per E8 type
    pub lower_bounds: Vec<LowerBoundRow>,
    pub open_cases: OpenCases,
    traces7: Vec<Vec<i64>>,
    traces8: Vec<Vec<i64>>,
    fixed7: Vec<Vec<u64>>,
    fixed8: Vec<Vec<u64>>,
}

#[derive(Deserialize)]
struct GroupFile {
    group: String,
    records: Vec<ClassRecord>,
}

fn corrupt(group: Group, index: usize, reason: impl Into<String>) -> Error {
    Error::TableCorrupt { group: group.name().into(), index, reason: reason.into() }
}

fn load_group(name: &str, group: Group) -> Result<Vec<ClassRecord>> {
    let text = data::load(name)?;
    let gf: GroupFile = serde_json::from_str(&text)?;
    if gf.group != group.name() {
        return Err(corrupt(group, 0, "group tag"));
    }
    let mut recs = gf.records;
    for r in &mut recs {
        r.group = group;
    }
    Ok(recs)
}

/// Checks every record invariant of one group table.
pub fn validate_group(group: Group, recs: &[ClassRecord]) -> Result<()> {
    if recs.len() != group.records() {
        return Err(corrupt(group, recs.len(), "record count"));
    }
    for (i, r) in recs.iter().enumerate() {
        if r.index != i + 1 {
            return Err(corrupt(group, i + 1, "index out of sequence"));
        }
        let total: u64 = r.orbit_type.iter().map(|&(s, m)| (s * m) as u64).sum();
        if total != group.curves() {
            return Err(corrupt(group, r.index, format!("orbit sizes sum to {total}")));
        }
        if r.eigenvalues.len() != group.rank() {
            return Err(corrupt(group, r.index, "eigenvalue count"));
        }
        for &(n, k) in &r.eigenvalues {
            if n == 0 || k >= n || (n > 1 && gcd(k, n) != 1) || (n == 1 && k != 0) {
                return Err(corrupt(group, r.index, "eigenvalue not in normal form"));
            }
        }
        let t = trace_sequence(r, 1).map_err(|_| corrupt(group, r.index, "eigenvalue data inconsistent"))?;
        if t[0] != r.trace {
            return Err(corrupt(group, r.index, format!("trace {} but eigenvalues give {}", r.trace, t[0])));
        }
        if r.twist == 0 || r.twist > recs.len() {
            return Err(corrupt(group, r.index, "twist out of range"));
        }
        let partner = &recs[r.twist - 1];
        if partner.twist != r.index {
            return Err(corrupt(group, r.index, "twist is not an involution"));
        }
        if negated_angles(&r.eigenvalues) != angles(&partner.eigenvalues) {
            return Err(corrupt(group, r.index, "twist does not negate eigenvalues"));
        }
    }
    if group == Group::E8 && recs[8].orbit_multiset() != vec![(1, 8), (2, 116)] {
        return Err(corrupt(group, 9, "type 9 must have orbit type 1^8 2^116"));
    }
    Ok(())
}

#[derive(Deserialize)]
struct RowsFile<T> {
    rows: Vec<T>,
}

#[derive(Deserialize)]
struct Deg2ExistenceFile {
    default_min_q: u64,
    thresholds: Vec<Deg2Threshold>,
}

#[derive(Deserialize)]
struct Deg2Threshold {
    min_q: u64,
    types: Vec<usize>,
}

#[derive(Deserialize)]
struct Deg1Deg2Row {
    deg1: usize,
    deg2: Vec<usize>,
}

/// Loads and validates every shipped table.
pub fn load_tables() -> Result<Tables> {
    let e7 = load_group("we7.json", Group::E7)?;
    let e8 = load_group("we8.json", Group::E8)?;
    validate_group(Group::E7, &e7)?;
    validate_group(Group::E8, &e8)?;
    let h1: RowsFile<H1Record> = serde_json::from_str(&data::load("h1.json")?)?;
    if h1.rows.len() != 10 {
        return Err(Error::TableCorrupt { group: "H1".into(), index: h1.rows.len(), reason: "row count".into() });
    }
    for (i, r) in h1.rows.iter().enumerate() {
        let ok1 = e8[r.deg1_type - 1].carter == r.deg1_symbol;
        let ok2 = match (r.deg2_type, &r.deg2_symbol) {
            (Some(t), Some(s)) => e7[t - 1].carter == *s,
            (None, None) => true,
            _ => false,
        };
        if !ok1 || !ok2 {
            return Err(Error::TableCorrupt { group: "H1".into(), index: i + 1, reason: "symbol mismatch".into() });
        }
    }
    let ex: Deg2ExistenceFile = serde_json::from_str(&data::load("deg2_existence.json")?)?;
    let mut deg2_existence = HashMap::new();
    for t in ex.thresholds {
        for ty in t.types {
            deg2_existence.insert(ty, t.min_q);
        }
    }
    let map: RowsFile<Deg1Deg2Row> = serde_json::from_str(&data::load("deg1_deg2.json")?)?;
    let lb: RowsFile<LowerBoundRow> = serde_json::from_str(&data::load("lower_bounds.json")?)?;
    let open_cases: OpenCases = serde_json::from_str(&data::load("open_cases.json")?)?;
    let tr = |recs: &[ClassRecord]| -> Result<Vec<Vec<i64>>> { recs.iter().map(|r| trace_sequence(r, N_MAX)).collect() };
    let fx = |recs: &[ClassRecord]| -> Vec<Vec<u64>> { recs.iter().map(|r| fixed_curve_counts(r, N_MAX)).collect() };
    Ok(Tables {
        traces7: tr(&e7)?,
        traces8: tr(&e8)?,
        fixed7: fx(&e7),
        fixed8: fx(&e8),
        e7,
        e8,
        h1: h1.rows,
        deg2_existence,
        deg2_default_min_q: ex.default_min_q,
        deg1_deg2: map.rows.into_iter().map(|r| (r.deg1, r.deg2)).collect(),
        lower_bounds: lb.rows,
        open_cases,
    })
}

static TABLES: Lazy<Tables> = Lazy::new(|| load_tables().expect("shipped tables are valid"));

/// The validated tables (loaded once).
pub fn tables() -> &'static Tables {
    &TABLES
}

impl Tables {
    pub fn group(&self, g: Group) -> &[ClassRecord] {
        match g {
            Group::E7 => &self.e7,
            Group::E8 => &self.e8,
        }
    }

    pub fn record(&self, g: Group, index: usize) -> Option<&ClassRecord> {
        self.group(g).get(index.wrapping_sub(1))
    }

    /// Precomputed t_1..t_60.
    pub fn traces(&self, g: Group, index: usize) -> &[i64] {
        match g {
            Group::E7 => &self.traces7[index - 1],
            Group::E8 => &self.traces8[index - 1],
        }
    }

    /// Precomputed F_1..F_60.
    pub fn fixed(&self, g: Group, index: usize) -> &[u64] {
        match g {
            Group::E7 => &self.fixed7[index - 1],
            Group::E8 => &self.fixed8[index - 1],
        }
    }

    pub fn deg2_min_q(&self, e7_type: usize) -> u64 {
        self.deg2_existence.get(&e7_type).copied().unwrap_or(self.deg2_default_min_q)
    }
}

/// Twist partner from the table.
pub fn twist(group: Group, index: usize) -> Result<usize> {
    tables().record(group, index).map(|r| r.twist).ok_or(Error::NoMatchingClass)
}

/// Twist partner recomputed from eigenvalue negation (unique for all but the
/// eigenvalue-equal pairs, where all candidates are returned).
pub fn twist_by_eigenvalues(group: Group, index: usize) -> Vec<usize> {
    let t = tables();
    let Some(r) = t.record(group, index) else { return vec![] };
    let neg = negated_angles(&r.eigenvalues);
    t.group(group).iter().filter(|s| angles(&s.eigenvalues) == neg).map(|s| s.index).collect()
}

// ---------------------------------------------------------------------------
// Exceptional classes of the blow-up of P^2 in eight points.

/// d L - Σ m_i E_i
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExcClass {
    pub d: i8,
    pub m: [i8; 8],
}

/// All 240 exceptional classes in the seven combinatorial families.
pub fn exceptional_classes() -> Vec<ExcClass> {
    let mut out = Vec::with_capacity(240);
    let subsets = |r: usize| -> Vec<u32> { (0u32..256).filter(|s| s.count_ones() as usize == r).collect() };
    for i in 0..8 {
        let mut m = [0; 8];
        m[i] = -1;
        out.push(ExcClass { d: 0, m });
    }
    for s in subsets(2) {
        out.push(ExcClass { d: 1, m: std::array::from_fn(|i| ((s >> i) & 1) as i8) });
    }
    for s in subsets(5) {
        out.push(ExcClass { d: 2, m: std::array::from_fn(|i| ((s >> i) & 1) as i8) });
    }
    for i in 0..8 {
        for j in 0..8 {
            if i != j {
                // double point at i, j omitted
                let m = std::array::from_fn(|l| if l == i { 2 } else if l == j { 0 } else { 1 });
                out.push(ExcClass { d: 3, m });
            }
        }
    }
    for s in subsets(3) {
        out.push(ExcClass { d: 4, m: std::array::from_fn(|i| 1 + ((s >> i) & 1) as i8) });
    }
    for s in subsets(6) {
        out.push(ExcClass { d: 5, m: std::array::from_fn(|i| 1 + ((s >> i) & 1) as i8) });
    }
    for i in 0..8 {
        out.push(ExcClass { d: 6, m: std::array::from_fn(|l| if l == i { 3 } else { 2 }) });
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupStructure {
    /// (orbit size, multiplicity)
    pub orbits: Vec<(u32, u32)>,
    /// t_1..t_{order}: 1 + #fixed points of perm^n
    pub traces: Vec<i64>,
}

/// Orbit structure on the 240 classes induced by a permutation of the 8 blown-up points.
/// `perm[i]` is the image of point i (0-based).
pub fn blowup_orbit_structure(perm: &[usize; 8]) -> BlowupStructure {
    let classes = exceptional_classes();
    let idx: HashMap<ExcClass, usize> = classes.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let act = |c: &ExcClass| -> ExcClass {
        let mut m = [0; 8];
        for i in 0..8 {
            m[perm[i]] = c.m[i];
        }
        ExcClass { d: c.d, m }
    };
    let mut seen = vec![false; classes.len()];
    let mut sizes = Vec::new();
    for i in 0..classes.len() {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            len += 1;
            j = idx[&act(&classes[j])];
        }
        sizes.push((len, 1));
    }
    let mut order = 1u32;
    for c in cycle_type(perm) {
        order = lcm(order, c as u32);
    }
    let traces = (1..=order as usize)
        .map(|n| {
            let fixed = (0..8)
                .filter(|&i| {
                    let mut j = i;
                    for _ in 0..n {
                        j = perm[j];
                    }
                    j == i
                })
                .count();
            1 + fixed as i64
        })
        .collect();
    BlowupStructure { orbits: merge_orbits(sizes.into_iter()), traces }
}

/// Cycle lengths, descending.
pub fn cycle_type(perm: &[usize; 8]) -> Vec<usize> {
    let mut seen = [false; 8];
    let mut out = Vec::new();
    for i in 0..8 {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        out.push(len);
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// A permutation with the given cycle type (lengths summing to 8).
pub fn perm_with_cycle_type(cycles: &[usize]) -> [usize; 8] {
    let mut perm = [0; 8];
    let mut start = 0;
    for &c in cycles {
        for i in 0..c {
            perm[start + i] = start + (i + 1) % c;
        }
        start += c;
    }
    assert_eq!(start, 8);
    perm
}

/// All partitions of n, each in descending order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// E8 records matching a blow-up structure by orbit multiset and trace sequence.
pub fn match_blowup(bs: &BlowupStructure) -> Vec<usize> {
    let t = tables();
    t.e8
        .iter()
        .filter(|r| r.orbit_multiset() == bs.orbits)
        .filter(|r| {
            let tr = t.traces(Group::E8, r.index);
            bs.traces.iter().enumerate().all(|(i, &v)| tr[i] == v)
        })
        .map(|r| r.index)
        .collect()
}

// ---------------------------------------------------------------------------
// Carter symbols.

/// One factor of a Carter symbol, e.g. ("D", 4, Some("a1")).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Factor {
    letter_rank: u8,
    rank: std::cmp::Reverse<u32>,
    suffix: String,
    letter: char,
}

fn parse_factor(s: &str) -> Option<(Factor, u32)> {
    let (name, exp) = match s.rsplit_once('^') {
        Some((n, e)) if !n.contains('(') || n.ends_with(')') => (n, e.parse().ok()?),
        _ => (s, 1),
    };
    let letter = name.chars().next()?;
    let letter_rank = match letter {
        'E' => 0,
        'D' => 1,
        'A' => 2,
        _ => return None,
    };
    let rest = &name[1..];
    let (digits, suffix) = match rest.find('(') {
        Some(i) => (&rest[..i], rest[i..].to_string()),
        None => (rest, String::new()),
    };
    let rank: u32 = digits.parse().ok()?;
    Some((Factor { letter_rank, rank: std::cmp::Reverse(rank), suffix, letter }, exp))
}

/// Parses a Carter symbol into (factor multiset, prime marks). Accepts "x" or
/// "×" as the product sign and "∅" (or empty) for the identity class.
pub fn parse_symbol(s: &str) -> Option<(Vec<(String, u32)>, usize)> {
    let mut s = s.trim().replace('×', "x");
    let primes = s.chars().rev().take_while(|&c| c == '\'').count();
    s.truncate(s.len() - primes);
    if s.starts_with('(') && s.ends_with(')') {
        s = s[1..s.len() - 1].to_string();
    }
    if s.is_empty() || s == "∅" {
        return Some((vec![], primes));
    }
    let mut fs: Vec<(Factor, u32)> = Vec::new();
    for part in s.split('x') {
        let (f, e) = parse_factor(part.trim())?;
        match fs.iter_mut().find(|(g, _)| *g == f) {
            Some((_, ee)) => *ee += e,
            None => fs.push((f, e)),
        }
    }
    fs.sort();
    Some((
        fs.into_iter().map(|(f, e)| (format!("{}{}{}", f.letter, f.rank.0, f.suffix), e)).collect(),
        primes,
    ))
}

fn render_symbol(fs: &[(String, u32)]) -> String {
    if fs.is_empty() {
        return "∅".into();
    }
    fs.iter()
        .map(|(n, e)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect::<Vec<_>>()
        .join("x")
}

/// Canonical form of a symbol with prime marks dropped.
pub fn unprimed_symbol(s: &str) -> Option<String> {
    parse_symbol(s).map(|(fs, _)| render_symbol(&fs))
}

/// Carter symbol of the blow-up of a degree-n point: R x A_{n-1} (A_0 omitted).
pub fn blowup_symbol(base: &str, n: usize) -> Result<String> {
    let (mut fs, _) = parse_symbol(base).ok_or_else(|| Error::Parse(format!("bad Carter symbol {base}")))?;
    if n >= 2 {
        let extra = format!("A{}", n - 1);
        fs.push((extra, 1));
        let joined = render_symbol(&fs);
        fs = parse_symbol(&joined).unwrap().0;
    }
    Ok(render_symbol(&fs))
}

// ---------------------------------------------------------------------------
// Type identification.

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitTrace {
    pub q: u64,
    /// a[n-1] = #X(F_{q^n})
    pub a: Vec<u64>,
    /// b[n-1] = number of Galois orbits of (-1)-curves of length n
    pub b: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identification {
    pub candidates: Vec<usize>,
    pub resolved: bool,
}

/// Whether E8 record `index` is consistent with the given data.
pub fn consistent(ot: &OrbitTrace, index: usize) -> bool {
    let t = tables();
    let tr = t.traces(Group::E8, index);
    let fx = t.fixed(Group::E8, index);
    let q = ot.q as i128;
    for (i, &a) in ot.a.iter().enumerate() {
        let n = i as u32 + 1;
        if i >= N_MAX {
            break;
        }
        let qn = q.pow(n);
        if a as i128 != qn * qn + tr[i] as i128 * qn + 1 {
            return false;
        }
    }
    for n in 1..=ot.b.len().min(N_MAX) {
        let s: u64 = (1..=n).filter(|d| n % d == 0).map(|d| d as u64 * ot.b[d - 1]).sum();
        if s != fx[n - 1] {
            return false;
        }
    }
    true
}

/// All E8 types consistent with the Orbit-Trace data.
pub fn identify_type(ot: &OrbitTrace) -> Result<Identification> {
    identify_among(ot, 1..=112)
}

pub fn identify_among(ot: &OrbitTrace, among: impl IntoIterator<Item = usize>) -> Result<Identification> {
    let candidates: Vec<usize> = among.into_iter().filter(|&i| consistent(ot, i)).collect();
    if candidates.is_empty() {
        return Err(Error::NoMatchingClass);
    }
    let resolved = candidates.len() == 1;
    Ok(Identification { candidates, resolved })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(2), vec![1, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn table_examples() {
        let t = tables();
        assert_eq!(t.e8[0].trace, 9);
        assert_eq!(t.e8[0].orbit_multiset(), vec![(1, 240)]);
        assert_eq!(t.e8[8].orbit_multiset(), vec![(1, 8), (2, 116)]);
        assert_eq!(t.e8[82].trace, -7);
        assert_eq!(t.e8[82].twist, 1);
        assert_eq!(&t.traces(Group::E8, 2)[..2], &[7, 9]);
        assert_eq!(t.traces(Group::E8, 83)[0], -7);
        assert_eq!(&t.fixed(Group::E8, 2)[..2], &[126, 240]);
        assert_eq!(twist(Group::E8, 1).unwrap(), 83);
        assert_eq!(twist(Group::E8, 92).unwrap(), 92);
        assert_eq!(twist(Group::E7, 1).unwrap(), 49);
    }

    #[test]
    fn symbols() {
        assert_eq!(blowup_symbol("∅", 8).unwrap(), "A7");
        assert_eq!(blowup_symbol("A1", 1).unwrap(), "A1");
        assert_eq!(blowup_symbol("A2", 3).unwrap(), "A2^2");
        assert_eq!(unprimed_symbol("(A3xA1^2)''").unwrap(), "A3xA1^2");
        assert_eq!(unprimed_symbol("A1xA3xA1").unwrap(), "A3xA1^2");
        assert_eq!(unprimed_symbol("D4(a1)×A2").unwrap(), "D4(a1)xA2");
    }

    #[test]
    fn blowup_examples() {
        let id = blowup_orbit_structure(&perm_with_cycle_type(&[1; 8]));
        assert_eq!(id.orbits, vec![(1, 240)]);
        let b = blowup_orbit_structure(&perm_with_cycle_type(&[2, 2, 2, 2]));
        assert_eq!(b.orbits, vec![(1, 8), (2, 116)]);
        assert_eq!(match_blowup(&b), vec![9]);
        let c = blowup_orbit_structure(&perm_with_cycle_type(&[8]));
        assert_eq!(c.orbits, vec![(4, 2), (8, 29)]);
        assert_eq!(match_blowup(&c), vec![63]);
    }
}
