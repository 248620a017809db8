//! Cospectrality census over graph6 streams.
//!
//! Each record is mapped to the 128-bit fingerprint of its A-alpha
//! polynomial. Records sharing a fingerprint are regrouped by their full
//! canonical encoding, so a hash collision can never merge two polynomials.

mod spill;

use std::collections::{BTreeMap, HashMap};
use std::io::BufRead;
use std::time::Instant;

use num_integer::Integer;
use rayon::prelude::*;

use crate::coeffs::decode_invariants;
use crate::engine::{alpha_charpoly, AlphaEngine};
use crate::error::CensusError;
use crate::graph::{canonical_form, parse_graph6, FamilySpec, Graph, TreeShape};
use crate::poly::{canonical_encode, fingerprint_bytes, BiPolyZ, Encoder};

const BATCH: usize = 1 << 16;
const PROGRESS_EVERY: usize = 100_000;

/// How fingerprint buckets are formed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// In-memory hash table keyed by fingerprint.
    #[default]
    HashTable,
    /// Sorted runs spilled to temporary files, then merged.
    SortMerge,
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    /// Worker threads for the map phase; 0 uses the rayon default.
    pub threads: usize,
    pub strategy: Strategy,
    /// Prints a line to stderr every 100000 records.
    pub progress: bool,
    /// Records per sorted run for [`Strategy::SortMerge`].
    pub run_records: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            threads: 0,
            strategy: Strategy::HashTable,
            progress: false,
            run_records: 1 << 22,
        }
    }
}

/// One row of the census table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    pub graphs: u64,
    pub distinct_polys: u64,
    pub with_mate: u64,
    pub max_family: u64,
}

impl CensusReport {
    /// `with_mate / graphs` in lowest terms.
    pub fn fraction_with_mate(&self) -> (u64, u64) {
        let g = self.with_mate.gcd(&self.graphs).max(1);
        (self.with_mate / g, self.graphs / g)
    }

    /// The fraction truncated to `places` decimals, e.g. `0.000007281`.
    pub fn fraction_decimal(&self, places: u32) -> String {
        let scaled = self.with_mate as u128 * 10u128.pow(places) / self.graphs.max(1) as u128;
        let s = format!("{:0>width$}", scaled, width = places as usize + 1);
        let (int, frac) = s.split_at(s.len() - places as usize);
        format!("{int}.{frac}")
    }

    /// `n, graphs, distinct_polys, with_mate, fraction, max_family`, tab-separated.
    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.n,
            self.graphs,
            self.distinct_polys,
            self.with_mate,
            self.fraction_decimal(9),
            self.max_family
        )
    }
}

/// Graphs sharing one A-alpha polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MateFamily {
    pub poly: BiPolyZ,
    /// graph6 strings, sorted.
    pub members: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct CensusOutput {
    pub report: CensusReport,
    pub families: Vec<MateFamily>,
}

/// A family member isomorphic to one of the checked specs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub spec: FamilySpec,
    pub member: String,
    pub family_size: usize,
}

/// Streams graph6 records and groups them by A-alpha polynomial.
pub fn run_census<R: BufRead + Send>(input: R, opts: &CensusOptions) -> Result<CensusOutput, CensusError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .expect("thread pool");
    pool.install(|| census_in_pool(input, opts))
}

fn census_in_pool<R: BufRead + Send>(input: R, opts: &CensusOptions) -> Result<CensusOutput, CensusError> {
    let mut sink: Box<dyn Sink> = match opts.strategy {
        Strategy::HashTable => Box::new(TableSink::default()),
        Strategy::SortMerge => Box::new(spill::SpillSink::new(opts.run_records)),
    };
    let started = Instant::now();
    let mut reader = Records::new(input);
    let mut order: Option<usize> = None;
    let mut total = 0usize;
    let mut next_progress = PROGRESS_EVERY;
    let mut batch: Vec<(usize, Vec<u8>)> = Vec::with_capacity(BATCH);
    loop {
        batch.clear();
        reader.fill(&mut batch, BATCH)?;
        if batch.is_empty() {
            break;
        }
        let mapped: Vec<Result<(usize, u128), CensusError>> = batch
            .par_iter()
            .map_init(
                || (AlphaEngine::new(), Encoder::new(0)),
                |(engine, enc), (line, g6)| map_record(*line, g6, engine, enc),
            )
            .collect();
        let mut keys = Vec::with_capacity(mapped.len());
        for (res, (line, _)) in mapped.into_iter().zip(&batch) {
            let (n, fp) = res?;
            match order {
                None => order = Some(n),
                Some(expected) if expected != n => {
                    return Err(CensusError::MixedOrder { line: *line, expected, found: n })
                }
                _ => {}
            }
            keys.push(fp);
        }
        sink.absorb(&keys, &batch)?;
        total += batch.len();
        if opts.progress && total >= next_progress {
            eprintln!("{total} records, {:.1}s", started.elapsed().as_secs_f64());
            next_progress += PROGRESS_EVERY;
        }
    }
    let n = order.ok_or(CensusError::EmptyInput)?;

    let mut acc = Accumulator::default();
    sink.buckets(&mut |bucket| acc.bucket(bucket))?;
    acc.finish(n)
}

fn map_record(
    line: usize,
    g6: &[u8],
    engine: &mut AlphaEngine,
    enc: &mut Encoder,
) -> Result<(usize, u128), CensusError> {
    let g = parse_graph6(g6).map_err(|source| CensusError::Parse { line, source })?;
    let fp = match engine.table(&g)? {
        Some(t) => {
            t.encode_into(enc);
            fingerprint_bytes(enc.bytes())
        }
        None => fingerprint_bytes(&canonical_encode(&alpha_charpoly(&g)?)),
    };
    Ok((g.n(), fp))
}

/// Collects `(fingerprint, graph6)` pairs and replays them grouped by fingerprint.
trait Sink {
    fn absorb(&mut self, keys: &[u128], records: &[(usize, Vec<u8>)]) -> Result<(), CensusError>;
    fn buckets(
        &mut self,
        f: &mut dyn FnMut(Vec<Vec<u8>>) -> Result<(), CensusError>,
    ) -> Result<(), CensusError>;
}

/// Fingerprint table over an arena of graph6 strings. A bucket value below
/// `SPILL` is the single record index; otherwise it points into `overflow`.
#[derive(Default)]
struct TableSink {
    arena: Vec<u8>,
    offsets: Vec<u64>,
    table: HashMap<u128, u32>,
    overflow: Vec<Vec<u32>>,
}

const SPILL: u32 = 1 << 31;

impl TableSink {
    fn record(&self, i: u32) -> Vec<u8> {
        let i = i as usize;
        let end = self.offsets.get(i + 1).map_or(self.arena.len(), |&o| o as usize);
        self.arena[self.offsets[i] as usize..end].to_vec()
    }
}

impl Sink for TableSink {
    fn absorb(&mut self, keys: &[u128], records: &[(usize, Vec<u8>)]) -> Result<(), CensusError> {
        for (&fp, (_, g6)) in keys.iter().zip(records) {
            let idx = self.offsets.len() as u32;
            assert!(idx < SPILL, "too many records for the in-memory table");
            self.offsets.push(self.arena.len() as u64);
            self.arena.extend_from_slice(g6);
            match self.table.get_mut(&fp) {
                None => {
                    self.table.insert(fp, idx);
                }
                Some(v) if *v < SPILL => {
                    self.overflow.push(vec![*v, idx]);
                    *v = SPILL | (self.overflow.len() as u32 - 1);
                }
                Some(v) => self.overflow[(*v & !SPILL) as usize].push(idx),
            }
        }
        Ok(())
    }

    fn buckets(
        &mut self,
        f: &mut dyn FnMut(Vec<Vec<u8>>) -> Result<(), CensusError>,
    ) -> Result<(), CensusError> {
        for &v in self.table.values() {
            let bucket = if v < SPILL {
                vec![self.record(v)]
            } else {
                self.overflow[(v & !SPILL) as usize].iter().map(|&i| self.record(i)).collect()
            };
            f(bucket)?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Accumulator {
    graphs: u64,
    distinct: u64,
    singletons: u64,
    families: Vec<MateFamily>,
}

impl Accumulator {
    fn bucket(&mut self, bucket: Vec<Vec<u8>>) -> Result<(), CensusError> {
        self.graphs += bucket.len() as u64;
        if bucket.len() == 1 {
            self.distinct += 1;
            self.singletons += 1;
            return Ok(());
        }
        let mut exact: BTreeMap<Vec<u8>, (BiPolyZ, Vec<String>)> = BTreeMap::new();
        for g6 in bucket {
            let g = parse_graph6(&g6).expect("record parsed during the map phase");
            let poly = alpha_charpoly(&g)?;
            let key = canonical_encode(&poly);
            let text = String::from_utf8(g6).expect("graph6 is ASCII");
            exact.entry(key).or_insert_with(|| (poly, Vec::new())).1.push(text);
        }
        for (_, (poly, mut members)) in exact {
            self.distinct += 1;
            if members.len() == 1 {
                self.singletons += 1;
                continue;
            }
            members.sort();
            self.families.push(MateFamily { poly, members });
        }
        Ok(())
    }

    fn finish(mut self, n: usize) -> Result<CensusOutput, CensusError> {
        for fam in &self.families {
            validate_family(fam)?;
        }
        self.families
            .sort_by(|a, b| b.members.len().cmp(&a.members.len()).then_with(|| a.members[0].cmp(&b.members[0])));
        let report = CensusReport {
            n,
            graphs: self.graphs,
            distinct_polys: self.distinct,
            with_mate: self.graphs - self.singletons,
            max_family: self.families.first().map_or(1, |f| f.members.len() as u64),
        };
        Ok(CensusOutput { report, families: self.families })
    }
}

/// Members must be distinct, pairwise non-isomorphic, and carry the
/// invariants decoded from the shared polynomial.
fn validate_family(fam: &MateFamily) -> Result<(), CensusError> {
    let graphs: Vec<Graph> = fam
        .members
        .iter()
        .map(|s| parse_graph6(s.as_bytes()).expect("record parsed during the map phase"))
        .collect();
    let decoded = decode_invariants(&fam.poly)
        .map_err(|e| CensusError::CrossCheck(format!("{}: {e}", fam.members[0])))?;
    for (g, s) in graphs.iter().zip(&fam.members) {
        if !decoded.matches(&g.basic_counts()) {
            return Err(CensusError::CrossCheck(format!(
                "{s}: counts differ from those decoded from the family polynomial"
            )));
        }
    }
    let mut by_degrees: BTreeMap<Vec<usize>, Vec<(usize, Graph)>> = BTreeMap::new();
    for (i, g) in graphs.iter().enumerate() {
        let mut d = g.degrees();
        d.sort_unstable();
        by_degrees.entry(d).or_default().push((i, g.clone()));
    }
    for group in by_degrees.values().filter(|g| g.len() > 1) {
        let forms: Vec<(usize, Graph)> = group.iter().map(|(i, g)| (*i, canonical_form(g))).collect();
        for (a, (i, fa)) in forms.iter().enumerate() {
            for (j, fb) in &forms[a + 1..] {
                if fa == fb {
                    return Err(CensusError::IsomorphicDuplicates(
                        fam.members[*i].clone(),
                        fam.members[*j].clone(),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Specs whose graph is isomorphic to a member of some family.
pub fn check_family_mate_free<'a>(
    specs: impl IntoIterator<Item = &'a FamilySpec>,
    families: &[MateFamily],
) -> Result<Vec<Violation>, crate::error::FamilyError> {
    let members: Vec<(Graph, &str, usize)> = families
        .iter()
        .flat_map(|f| f.members.iter().map(move |m| (m, f.members.len())))
        .map(|(m, size)| {
            let g = parse_graph6(m.as_bytes()).expect("family members are valid graph6");
            (canonical_form(&g), m.as_str(), size)
        })
        .collect();
    let mut out = Vec::new();
    for spec in specs {
        let form = canonical_form(&spec.build()?);
        for (g, m, size) in &members {
            if *g == form {
                out.push(Violation { spec: spec.clone(), member: m.to_string(), family_size: *size });
            }
        }
    }
    Ok(out)
}

/// Members of any family that are starlike or double-starlike trees.
pub fn starlike_members(families: &[MateFamily]) -> Vec<(String, TreeShape)> {
    families
        .iter()
        .flat_map(|f| &f.members)
        .filter_map(|m| {
            let shape = parse_graph6(m.as_bytes()).ok()?.tree_shape();
            matches!(shape, TreeShape::Starlike | TreeShape::DoubleStarlike).then(|| (m.clone(), shape))
        })
        .collect()
}

/// Line reader that skips blank lines and an optional `>>graph6<<` header.
struct Records<R> {
    input: R,
    line: usize,
    buf: Vec<u8>,
}

impl<R: BufRead> Records<R> {
    fn new(input: R) -> Self {
        Records { input, line: 0, buf: Vec::new() }
    }

    fn fill(&mut self, out: &mut Vec<(usize, Vec<u8>)>, max: usize) -> std::io::Result<()> {
        while out.len() < max {
            self.buf.clear();
            if self.input.read_until(b'\n', &mut self.buf)? == 0 {
                break;
            }
            self.line += 1;
            let mut rec = self.buf.trim_ascii();
            if self.line == 1 {
                rec = rec.strip_prefix(b">>graph6<<").unwrap_or(rec);
            }
            if !rec.is_empty() {
                out.push((self.line, rec.to_vec()));
            }
        }
        Ok(())
    }
}
