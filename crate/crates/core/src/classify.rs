//! Primality classification with checkable certificates, batch runs over
//! rank ranges, and the reproduction harness for the published examples.

use std::collections::BTreeSet;
use std::fs::{self, File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{
    buchberger_with_budget, minimalize, AlgebraError, Binomial, Budget, GroebnerBasis, Monomial, TermOrder,
};
use crate::enumerate::{self, Class, EnumerateError};
use crate::geometry::{fixtures, Interval, Polyomino, Vertex};
use crate::grid::{make_grid, GridSpec};
use crate::text::{binomial_to_string, parse_binomial, parse_polyomino, ParseError};
use crate::toric::{build_alpha_matrix, toric_ideal_with_budget, toric_member_binomial};
use crate::walks::{find_zigzag, verify_zigzag, walk_binomial, SearchMode, ZigZagWalk};

pub mod reference {
    //! Published values the harness reproduces.

    /// Multiply connected free polyominoes of rank 7..=14.
    pub const MULTIPLY_CONNECTED_COUNTS: [(usize, u64); 8] = [
        (7, 1),
        (8, 6),
        (9, 37),
        (10, 195),
        (11, 979),
        (12, 4663),
        (13, 21474),
        (14, 96496),
    ];

    /// The four degree-4 generators of `J_P` for the two-ears polyomino.
    pub const TWO_EARS_QUARTICS: [&str; 4] = [
        "x(1,3)*x(3,1)*x(7,4)*x(8,2) - x(1,2)*x(3,4)*x(7,1)*x(8,3)",
        "x(1,3)*x(2,1)*x(7,4)*x(8,2) - x(1,2)*x(2,4)*x(7,1)*x(8,3)",
        "x(1,3)*x(3,1)*x(6,4)*x(8,2) - x(1,2)*x(3,4)*x(6,1)*x(8,3)",
        "x(1,3)*x(2,1)*x(6,4)*x(8,2) - x(1,2)*x(2,4)*x(6,1)*x(8,3)",
    ];

    pub const TWO_EARS_GENERATORS: (usize, usize, usize) = (50, 46, 4);

    /// A degree-6 element of `J_P \ I_P` for the two-holes polyomino that is
    /// not a walk binomial.
    pub const TWO_PF_SEXTIC: &str =
        "x(1,4)*x(3,1)*x(4,6)*x(5,1)*x(6,6)*x(8,3) - x(1,3)*x(3,6)*x(4,1)*x(5,6)*x(6,1)*x(8,4)";

    pub fn multiply_connected_count(rank: usize) -> Option<u64> {
        MULTIPLY_CONNECTED_COUNTS.iter().find(|(r, _)| *r == rank).map(|(_, c)| *c)
    }
}

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("i/o error on {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{path}, line {line}: bad record: {message}")]
    BadRecord { path: PathBuf, line: usize, message: String },
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> ClassifyError + '_ {
    move |source| ClassifyError::Io { path: path.to_path_buf(), source }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Prime,
    NotPrime,
    Unresolved,
    Aborted,
}

/// A walk in plain coordinates, as stored in certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkRecord {
    pub intervals: Vec<[[i32; 2]; 2]>,
    pub v: Vec<[i32; 2]>,
    pub z: Vec<[i32; 2]>,
    pub u: Vec<[i32; 2]>,
}

fn pt(v: Vertex) -> [i32; 2] {
    [v.x, v.y]
}

fn vx(p: [i32; 2]) -> Vertex {
    Vertex::new(p[0], p[1])
}

impl From<&ZigZagWalk> for WalkRecord {
    fn from(w: &ZigZagWalk) -> Self {
        WalkRecord {
            intervals: w.intervals.iter().map(|iv| [pt(iv.a), pt(iv.b)]).collect(),
            v: w.v.iter().copied().map(pt).collect(),
            z: w.z.iter().copied().map(pt).collect(),
            u: w.u.iter().copied().map(pt).collect(),
        }
    }
}

impl From<&WalkRecord> for ZigZagWalk {
    fn from(w: &WalkRecord) -> Self {
        ZigZagWalk {
            intervals: w.intervals.iter().map(|[a, b]| Interval::new(vx(*a), vx(*b))).collect(),
            v: w.v.iter().copied().map(vx).collect(),
            z: w.z.iter().copied().map(vx).collect(),
            u: w.u.iter().copied().map(vx).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotPrimeChecks {
    #[serde(rename = "x_v1_times_fW_in_IP")]
    pub x_v1_times_fw_in_ip: bool,
    #[serde(rename = "fW_not_in_IP")]
    pub fw_not_in_ip: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant")]
pub enum Certificate {
    #[serde(rename = "NOT_PRIME")]
    NotPrime {
        walk: WalkRecord,
        #[serde(rename = "f_W")]
        f_w: String,
        checks: NotPrimeChecks,
    },
    #[serde(rename = "PRIME")]
    Prime { toric_equality: bool, gb_sizes: (usize, usize) },
    #[serde(rename = "UNRESOLVED")]
    Unresolved { no_zigzag: bool, toric_equal: bool },
    #[serde(rename = "ABORTED")]
    Aborted { stage: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub key: String,
    pub rank: usize,
    pub holes: usize,
    pub status: Status,
    pub certificate: Certificate,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct ClassifyOptions {
    pub budget: Budget,
    /// When false, `elapsed_ms` is written as 0 so outputs are reproducible byte for byte.
    pub timing: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { budget: Budget::default(), timing: true }
    }
}

fn ideal_gb(p: &Polyomino, budget: Budget) -> Result<GroebnerBasis, AlgebraError> {
    buchberger_with_budget(&p.inner_2_minors(), &TermOrder::degrevlex(p.vertices().len()), budget)
}

/// The two normal-form checks exhibiting `x_{v_1}` and `f_W` as zerodivisors.
pub fn zerodivisor_checks(p: &Polyomino, ip: &GroebnerBasis, w: &ZigZagWalk) -> Option<(Binomial, NotPrimeChecks)> {
    let f = walk_binomial(p, w).ok()?;
    let n = p.vertices().len();
    let v1 = p.vertex_index(w.v[0])?;
    let shifted = f.mul_monomial(&Monomial::from_vars(n, &[v1]), ip.order());
    let checks = NotPrimeChecks { x_v1_times_fw_in_ip: ip.contains(&shifted), fw_not_in_ip: !ip.contains(&f) };
    Some((f, checks))
}

fn not_prime_certificate(p: &Polyomino, ip: &GroebnerBasis, walks: &[ZigZagWalk]) -> Option<Certificate> {
    for w in walks {
        for k in 0..w.len() {
            let rotated = w.rotated(k);
            if let Some((f, checks)) = zerodivisor_checks(p, ip, &rotated) {
                if checks.x_v1_times_fw_in_ip && checks.fw_not_in_ip {
                    return Some(Certificate::NotPrime {
                        walk: WalkRecord::from(&rotated),
                        f_w: binomial_to_string(&f, p),
                        checks,
                    });
                }
            }
        }
    }
    None
}

fn aborted(stage: &str, e: AlgebraError) -> (Status, Certificate) {
    (Status::Aborted, Certificate::Aborted { stage: stage.to_string(), reason: e.to_string() })
}

fn toric_verdict(p: &Polyomino, ip: &GroebnerBasis, budget: Budget, no_zigzag: bool) -> (Status, Certificate) {
    match toric_ideal_with_budget(p, budget) {
        Err(e) => aborted("toric", e),
        Ok(jp) if jp == *ip => {
            (Status::Prime, Certificate::Prime { toric_equality: true, gb_sizes: (ip.len(), jp.len()) })
        }
        Ok(_) => (Status::Unresolved, Certificate::Unresolved { no_zigzag, toric_equal: false }),
    }
}

/// Simple shapes go straight to the toric comparison; otherwise a zig-zag
/// walk certifies non-primality and only walk-free shapes reach `J_P`.
pub fn classify_with(p: &Polyomino, opts: &ClassifyOptions) -> ClassificationRecord {
    let start = Instant::now();
    let (status, certificate) = match ideal_gb(p, opts.budget) {
        Err(e) => aborted("inner_minors", e),
        Ok(ip) => {
            if p.is_simple() {
                toric_verdict(p, &ip, opts.budget, true)
            } else {
                let walks = find_zigzag(p, SearchMode::All);
                match not_prime_certificate(p, &ip, &walks) {
                    Some(cert) => (Status::NotPrime, cert),
                    None => toric_verdict(p, &ip, opts.budget, walks.is_empty()),
                }
            }
        }
    };
    ClassificationRecord {
        key: p.canonical_key(),
        rank: p.rank(),
        holes: p.holes().len(),
        status,
        certificate,
        elapsed_ms: if opts.timing { start.elapsed().as_millis() as u64 } else { 0 },
    }
}

pub fn classify(p: &Polyomino) -> ClassificationRecord {
    classify_with(p, &ClassifyOptions::default())
}

/// Re-checks a record against its polyomino without rerunning the walk search.
pub fn check_certificate(p: &Polyomino, rec: &ClassificationRecord) -> Result<(), String> {
    if rec.key != p.canonical_key() {
        return Err("key does not match the polyomino".into());
    }
    match (&rec.status, &rec.certificate) {
        (Status::NotPrime, Certificate::NotPrime { walk, f_w, checks }) => {
            let w = ZigZagWalk::from(walk);
            let report = verify_zigzag(p, &w).map_err(|e| e.to_string())?;
            if !report.passed() {
                return Err(format!("walk fails {}", report.failures().join(", ")));
            }
            let stated = parse_binomial(f_w, p).map_err(|e| e.to_string())?;
            let ip = ideal_gb(p, Budget::UNLIMITED).map_err(|e| e.to_string())?;
            let (f, actual) = zerodivisor_checks(p, &ip, &w).ok_or("walk has no binomial")?;
            if !f.same_up_to_sign(&stated) {
                return Err("f_W does not match the walk".into());
            }
            if actual != *checks || !actual.x_v1_times_fw_in_ip || !actual.fw_not_in_ip {
                return Err(format!("checks do not hold: {actual:?}"));
            }
            Ok(())
        }
        (Status::Prime, Certificate::Prime { toric_equality: true, gb_sizes }) => {
            let ip = ideal_gb(p, Budget::UNLIMITED).map_err(|e| e.to_string())?;
            let jp = toric_ideal_with_budget(p, Budget::UNLIMITED).map_err(|e| e.to_string())?;
            if ip != jp {
                return Err("I_P and J_P differ".into());
            }
            if *gb_sizes != (ip.len(), jp.len()) {
                return Err("basis sizes differ".into());
            }
            Ok(())
        }
        (Status::Unresolved, Certificate::Unresolved { .. }) | (Status::Aborted, Certificate::Aborted { .. }) => Ok(()),
        _ => Err("status does not match certificate".into()),
    }
}

/// One line of JSON with keys in sorted order.
pub fn serialize_record(rec: &ClassificationRecord) -> String {
    // serde_json's default map is ordered, so going through Value sorts keys
    let value = serde_json::to_value(rec).expect("record is serializable");
    serde_json::to_string(&value).expect("value is serializable")
}

pub fn parse_record(line: &str) -> Result<ClassificationRecord, serde_json::Error> {
    serde_json::from_str(line)
}

pub fn parse_polyomino_file(path: &Path) -> Result<Polyomino, ClassifyError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    parse_polyomino(&text).map_err(|source| ClassifyError::Parse { path: path.to_path_buf(), source })
}

/// Several polyominoes: one `poly{...}` per line, or grid blocks separated by blank lines.
pub fn parse_polyomino_list(path: &Path) -> Result<Vec<Polyomino>, ClassifyError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    let chunks: Vec<String> = if text.trim_start().starts_with("poly{") {
        text.lines().filter(|l| !l.trim().is_empty()).map(str::to_string).collect()
    } else {
        text.split("\n\n")
            .filter(|c| !c.trim().is_empty())
            .map(|c| c.trim_matches('\n').to_string() + "\n")
            .collect()
    };
    chunks
        .iter()
        .map(|c| parse_polyomino(c).map_err(|source| ClassifyError::Parse { path: path.to_path_buf(), source }))
        .collect()
}

pub fn read_records(path: &Path) -> Result<Vec<ClassificationRecord>, ClassifyError> {
    let file = File::open(path).map_err(io_err(path))?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(io_err(path))?;
        if line.trim().is_empty() {
            continue;
        }
        let rec = parse_record(&line).map_err(|e| ClassifyError::BadRecord {
            path: path.to_path_buf(),
            line: i + 1,
            message: e.to_string(),
        })?;
        out.push(rec);
    }
    Ok(out)
}

#[derive(Debug, Clone, Default)]
pub struct BatchOptions {
    pub jobs: usize,
    pub out: Option<PathBuf>,
    pub resume: bool,
    pub classify: ClassifyOptions,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BatchSummary {
    pub total: usize,
    pub computed: usize,
    pub skipped: usize,
    pub prime: usize,
    pub not_prime: usize,
    pub unresolved: usize,
    pub aborted: usize,
}

impl BatchSummary {
    fn tally(records: &[ClassificationRecord], computed: usize) -> Self {
        let count = |s: Status| records.iter().filter(|r| r.status == s).count();
        BatchSummary {
            total: records.len(),
            computed,
            skipped: records.len() - computed,
            prime: count(Status::Prime),
            not_prime: count(Status::NotPrime),
            unresolved: count(Status::Unresolved),
            aborted: count(Status::Aborted),
        }
    }
}

pub struct BatchResult {
    pub summary: BatchSummary,
    pub records: Vec<ClassificationRecord>,
}

/// Classifies `shapes` in parallel. Finished records are appended to the
/// output as they arrive; at the end the file is rewritten sorted by
/// `(rank, key)`. With `resume`, keys already in the file are not recomputed.
pub fn classify_batch(shapes: Vec<Polyomino>, opts: &BatchOptions) -> Result<BatchResult, ClassifyError> {
    let mut existing = Vec::new();
    if let (true, Some(path)) = (opts.resume, &opts.out) {
        if path.exists() {
            existing = read_records(path)?;
        }
    }
    let done: BTreeSet<String> = existing.iter().map(|r| r.key.clone()).collect();
    let mut seen = BTreeSet::new();
    let todo: Vec<Polyomino> = shapes
        .into_iter()
        .map(|p| p.canonical())
        .filter(|p| {
            let key = p.canonical_key();
            !done.contains(&key) && seen.insert(key)
        })
        .collect();

    let writer = match &opts.out {
        Some(path) => {
            let file = OpenOptions::new()
                .create(true)
                .append(opts.resume)
                .write(true)
                .truncate(!opts.resume)
                .open(path)
                .map_err(io_err(path))?;
            Some(Mutex::new(io::BufWriter::new(file)))
        }
        None => None,
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .expect("thread pool");
    let fresh: Vec<Result<ClassificationRecord, io::Error>> = pool.install(|| {
        todo.par_iter()
            .map(|p| {
                let rec = classify_with(p, &opts.classify);
                if let Some(w) = &writer {
                    let mut w = w.lock().expect("writer lock");
                    writeln!(w, "{}", serialize_record(&rec))?;
                    w.flush()?;
                }
                Ok(rec)
            })
            .collect()
    });
    drop(writer);
    let computed = fresh.len();
    let mut records = existing;
    for r in fresh {
        records.push(r.map_err(|e| match &opts.out {
            Some(path) => ClassifyError::Io { path: path.clone(), source: e },
            None => unreachable!("no writer without an output path"),
        })?);
    }
    records.sort_by(|a, b| (a.rank, &a.key).cmp(&(b.rank, &b.key)));
    records.dedup_by(|a, b| a.key == b.key);

    if let Some(path) = &opts.out {
        let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err(path))?;
        for r in &records {
            writeln!(tmp, "{}", serialize_record(r)).map_err(io_err(path))?;
        }
        tmp.persist(path).map_err(|e| ClassifyError::Io { path: path.clone(), source: e.error })?;
    }
    Ok(BatchResult { summary: BatchSummary::tally(&records, computed), records })
}

/// One record per multiply connected free polyomino with rank in `ranks`.
pub fn run_batch(ranks: RangeInclusive<usize>, opts: &BatchOptions) -> Result<BatchResult, ClassifyError> {
    let mut shapes = Vec::new();
    for r in ranks {
        enumerate::check_rank(r, enumerate::DEFAULT_MAX_RANK)?;
        shapes.extend(enumerate::enumerate_free(r, Class::MultiplyConnected)?);
    }
    classify_batch(shapes, opts)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct PaperReport {
    pub checks: Vec<CheckResult>,
}

impl PaperReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult { name: name.to_string(), passed, detail: detail.into() });
    }
}

pub fn grid_instances() -> Vec<GridSpec> {
    vec![
        GridSpec::new(4, 4, vec![(2, 3)], vec![(2, 3)]),
        GridSpec::new(6, 4, vec![(2, 3), (4, 5)], vec![(2, 3)]),
        GridSpec::new(7, 7, vec![(2, 4)], vec![(2, 4)]),
    ]
}

fn check_two_ears(report: &mut PaperReport) {
    let p = fixtures::two_ears();
    let fs: Vec<Binomial> = reference::TWO_EARS_QUARTICS
        .iter()
        .map(|s| parse_binomial(s, &p).expect("reference binomial parses"))
        .collect();
    let jp = match toric_ideal_with_budget(&p, Budget::UNLIMITED) {
        Ok(jp) => jp,
        Err(e) => return report.push("two_ears.generators", false, e.to_string()),
    };
    let ip = ideal_gb(&p, Budget::UNLIMITED).expect("unlimited budget");
    let minimal = minimalize(jp.elements()).expect("homogeneous basis");
    let deg = |d: u32| minimal.iter().filter(|g| g.degree() == d).count();
    let (total, quad, quart) = reference::TWO_EARS_GENERATORS;
    report.push(
        "two_ears.generators",
        minimal.len() == total && deg(2) == quad && deg(4) == quart,
        format!("{} minimal generators: {} of degree 2, {} of degree 4", minimal.len(), deg(2), deg(4)),
    );
    let alpha = build_alpha_matrix(&p);
    let in_jp = fs.iter().all(|f| toric_member_binomial(&alpha, f) && jp.contains(f));
    let outside_ip = fs.iter().all(|f| !ip.contains(f));
    report.push(
        "two_ears.quartics",
        in_jp && outside_ip,
        format!("in J_P: {in_jp}, outside I_P: {outside_ip}"),
    );
    let walks = find_zigzag(&p, SearchMode::All);
    let wbs: Vec<Binomial> = walks.iter().filter_map(|w| walk_binomial(&p, w).ok()).collect();
    let same_set = wbs.len() == fs.len()
        && wbs.iter().all(|b| fs.iter().any(|f| f.same_up_to_sign(b)))
        && fs.iter().all(|f| wbs.iter().any(|b| f.same_up_to_sign(b)));
    report.push("two_ears.walks", same_set, format!("{} walk classes", walks.len()));
}

fn check_two_pf(report: &mut PaperReport) {
    let p = fixtures::two_pf();
    let g = parse_binomial(reference::TWO_PF_SEXTIC, &p).expect("reference binomial parses");
    let jp = match toric_ideal_with_budget(&p, Budget::UNLIMITED) {
        Ok(jp) => jp,
        Err(e) => return report.push("two_pf.sextic", false, e.to_string()),
    };
    let ip = ideal_gb(&p, Budget::UNLIMITED).expect("unlimited budget");
    let in_jp = jp.contains(&g) && toric_member_binomial(&build_alpha_matrix(&p), &g);
    let outside_ip = !ip.contains(&g);
    report.push(
        "two_pf.sextic",
        g.degree() == 6 && in_jp && outside_ip,
        format!("degree {}, in J_P: {in_jp}, outside I_P: {outside_ip}", g.degree()),
    );
    let walks = find_zigzag(&p, SearchMode::All);
    let is_walk = walks
        .iter()
        .filter_map(|w| walk_binomial(&p, w).ok())
        .any(|b| b.same_up_to_sign(&g));
    report.push(
        "two_pf.walks",
        walks.len() >= 2 && !is_walk,
        format!("{} walk classes, sextic is a walk binomial: {is_walk}", walks.len()),
    );
}

/// Reproduces the published counts, examples and theorem checks up to `max_rank`.
pub fn verify_paper(max_rank: usize, jobs: usize) -> Result<PaperReport, ClassifyError> {
    let mut report = PaperReport::default();
    let max_rank = max_rank.max(7);
    enumerate::check_rank(max_rank, enumerate::DEFAULT_MAX_RANK)?;

    let table = enumerate::count_table(max_rank)?;
    let mut counts_ok = true;
    let mut detail = Vec::new();
    for c in table.iter().filter(|c| c.rank >= 7) {
        let expected = reference::multiply_connected_count(c.rank);
        counts_ok &= expected == Some(c.multiply_connected);
        detail.push(format!("{}:{}", c.rank, c.multiply_connected));
    }
    report.push("counts", counts_ok, detail.join(" "));

    check_two_ears(&mut report);
    check_two_pf(&mut report);

    let opts = BatchOptions { jobs, ..BatchOptions::default() };
    let batch = run_batch(7..=max_rank, &opts)?;
    let mismatched = batch
        .records
        .iter()
        .filter(|r| {
            let p = parse_polyomino(&r.key).expect("keys parse");
            let has_walk = !find_zigzag(&p, SearchMode::First).is_empty();
            (r.status == Status::NotPrime) != has_walk
        })
        .count();
    let s = &batch.summary;
    report.push(
        "theorem",
        s.unresolved == 0 && s.aborted == 0 && mismatched == 0,
        format!(
            "{} shapes: {} prime, {} not prime, {} unresolved, {} aborted, {} walk mismatches",
            s.total, s.prime, s.not_prime, s.unresolved, s.aborted, mismatched
        ),
    );

    for spec in grid_instances() {
        let name = format!("grid {spec}");
        match make_grid(&spec) {
            Ok(p) => {
                let rec = classify(&p);
                let no_walk = find_zigzag(&p, SearchMode::First).is_empty();
                report.push(&name, rec.status == Status::Prime && no_walk, format!("{:?}", rec.status));
            }
            Err(e) => report.push(&name, false, e.to_string()),
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::fixtures::*;

    #[test]
    fn fixtures_classify() {
        let rec = classify(&two_ears());
        assert_eq!(rec.status, Status::NotPrime);
        assert!(check_certificate(&two_ears(), &rec).is_ok());
        let Certificate::NotPrime { f_w, .. } = &rec.certificate else { panic!() };
        let p = two_ears();
        let f = parse_binomial(f_w, &p).unwrap();
        assert!(reference::TWO_EARS_QUARTICS
            .iter()
            .any(|s| parse_binomial(s, &p).unwrap().same_up_to_sign(&f)));

        let rec = classify(&square_frame());
        assert_eq!(rec.status, Status::Prime);
        assert!(check_certificate(&square_frame(), &rec).is_ok());
        assert_eq!(classify(&monomino()).status, Status::Prime);
    }

    #[test]
    fn record_format() {
        let mut rec = classify(&square_frame());
        rec.elapsed_ms = 0;
        let line = serialize_record(&rec);
        assert!(line.starts_with(r#"{"certificate":{"gb_sizes":["#), "{line}");
        assert!(line.contains(r#""toric_equality":true,"variant":"PRIME"}"#));
        assert!(line.ends_with(r#","elapsed_ms":0,"holes":1,"key":"poly{ (1,1);(1,2);(1,3);(2,1);(2,3);(3,1);(3,2);(3,3) }","rank":8,"status":"prime"}"#));
        assert_eq!(parse_record(&line).unwrap(), rec);

        let mut rec = classify(&two_ears());
        rec.elapsed_ms = 0;
        let line = serialize_record(&rec);
        for field in ["\"x_v1_times_fW_in_IP\":true", "\"fW_not_in_IP\":true", "\"f_W\":", "\"status\":\"not_prime\""] {
            assert!(line.contains(field), "{field} missing from {line}");
        }
        assert_eq!(parse_record(&line).unwrap(), rec);
    }

    #[test]
    fn tampered_certificates_are_rejected() {
        let p = two_ears();
        let mut rec = classify(&p);
        if let Certificate::NotPrime { walk, .. } = &mut rec.certificate {
            walk.z.swap(0, 1);
        }
        assert!(check_certificate(&p, &rec).is_err());
        let mut rec = classify(&square_frame());
        rec.status = Status::NotPrime;
        assert!(check_certificate(&square_frame(), &rec).is_err());
    }

    #[test]
    fn tiny_budget_aborts() {
        let opts = ClassifyOptions { budget: Budget { max_basis: 3, max_pairs: 10 }, timing: false };
        let rec = classify_with(&square_frame(), &opts);
        assert_eq!(rec.status, Status::Aborted);
    }

    #[test]
    fn batch_rank_seven_and_resume() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("r7.jsonl");
        let opts = BatchOptions {
            jobs: 1,
            out: Some(out.clone()),
            resume: false,
            classify: ClassifyOptions { timing: false, ..ClassifyOptions::default() },
        };
        let first = run_batch(7..=7, &opts).unwrap();
        assert_eq!(first.summary.total, 1);
        assert_eq!(first.summary.computed, 1);
        assert!(matches!(first.records[0].status, Status::Prime | Status::NotPrime));
        let bytes = fs::read(&out).unwrap();

        let again = run_batch(7..=7, &BatchOptions { resume: true, ..opts.clone() }).unwrap();
        assert_eq!(again.summary.computed, 0);
        assert_eq!(fs::read(&out).unwrap(), bytes);
    }
}
