use std::thread;

use hosvd3::qubit3::{
    classify as classify_state, polytope_membership, ClassifyOptions, PolytopePoint, ThreeQubitState, DIMS,
};
use hosvd3::random::haar_state;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::report::{ClassifyDoc, DecomposeDoc};
use crate::state_file::StateFile;

/// Name of the generator behind `sample`, reported in its summary.
pub const GENERATOR: &str = "ChaCha8 (rand_chacha), stream = record id";

pub const SAMPLE_HEADER: [&str; 7] = ["id", "s1", "s2", "s3", "separability", "case", "special"];
pub const MESH_HEADER: [&str; 6] = ["element", "kind", "index", "s1", "s2", "s3"];

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn decompose(f: &StateFile, tol: f64) -> CliResult<String> {
    let r = hosvd3::hosvd(&f.tensor()?, tol)?;
    Ok(to_json(&DecomposeDoc::new(&r, f.label.clone(), tol)))
}

pub fn classify(f: &StateFile, opts: ClassifyOptions) -> CliResult<String> {
    if f.dims != DIMS {
        return Err(CliError::Input(format!("classify needs dims [2, 2, 2], got {:?}", f.dims)));
    }
    let s = ThreeQubitState::from_tensor(&f.tensor()?)?;
    let c = classify_state(&s, opts)?;
    Ok(to_json(&ClassifyDoc::new(&s, &c, f.label.clone(), opts.tol, opts.sigma_tol)))
}

/// `x` rounded to `digits` significant digits, in positional notation.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleRecord {
    pub id: u64,
    pub s: [f64; 3],
    pub separability: &'static str,
    pub case: &'static str,
    pub special: &'static str,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleSummary {
    pub generator: &'static str,
    pub seed: u64,
    pub count: u64,
    pub tol: f64,
    pub sigma_tol: f64,
    pub violations: u64,
    pub max_violation: f64,
    pub min_s: [f64; 3],
    pub max_s: [f64; 3],
}

/// The Haar-random state behind record `id`: eight standard complex
/// Gaussians from `ChaCha8Rng` seeded with `seed` on stream `id`, normalized.
pub fn sample_state(seed: u64, id: u64) -> ThreeQubitState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    ThreeQubitState::from_tensor(&haar_state(&DIMS, &mut rng)).expect("Gaussian sample is nonzero")
}

fn sample_range(seed: u64, ids: std::ops::Range<u64>, opts: ClassifyOptions) -> CliResult<Vec<SampleRecord>> {
    ids.map(|id| {
        let c = classify_state(&sample_state(seed, id), opts)?;
        Ok(SampleRecord {
            id,
            s: c.sigma_triple,
            separability: c.separability.tag(),
            case: c.case.tag(),
            special: c.special.tag(),
        })
    })
    .collect()
}

/// Classifies `count` sampled states. Work is split over threads in
/// contiguous id ranges, and the output is in id order.
pub fn sample_records(count: u64, seed: u64, opts: ClassifyOptions) -> CliResult<(Vec<SampleRecord>, SampleSummary)> {
    if count == 0 {
        return Err(CliError::Input("count must be at least 1".into()));
    }
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(count as usize) as u64;
    let chunk = count.div_ceil(workers);
    let shards: Vec<CliResult<Vec<SampleRecord>>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let ids = (w * chunk).min(count)..((w + 1) * chunk).min(count);
                scope.spawn(move || sample_range(seed, ids, opts))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("sampling thread panicked")).collect()
    });
    let mut records = Vec::with_capacity(count as usize);
    for shard in shards {
        records.extend(shard?);
    }

    let mut summary = SampleSummary {
        generator: GENERATOR,
        seed,
        count,
        tol: opts.tol,
        sigma_tol: opts.sigma_tol,
        violations: 0,
        max_violation: 0.0,
        min_s: [f64::INFINITY; 3],
        max_s: [f64::NEG_INFINITY; 3],
    };
    for r in &records {
        let m = polytope_membership(&PolytopePoint::new(r.s), opts.tol);
        if !m.inside {
            summary.violations += 1;
        }
        summary.max_violation = summary.max_violation.max(m.worst_violation());
        for k in 0..3 {
            summary.min_s[k] = summary.min_s[k].min(r.s[k]);
            summary.max_s[k] = summary.max_s[k].max(r.s[k]);
        }
    }
    Ok((records, summary))
}

pub fn samples_csv(records: &[SampleRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SAMPLE_HEADER).expect("in-memory write");
    for r in records {
        w.write_record([
            r.id.to_string(),
            fmt_sig(r.s[0], 12),
            fmt_sig(r.s[1], 12),
            fmt_sig(r.s[2], 12),
            r.separability.to_string(),
            r.case.to_string(),
            r.special.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ASCII output")
}

pub fn summary_json(s: &SampleSummary) -> String {
    let mut out = serde_json::to_string(s).expect("summary serializes");
    out.push('\n');
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct MeshRow {
    pub element: &'static str,
    pub kind: &'static str,
    pub index: usize,
    pub s: [f64; 3],
}

type P = [f64; 3];

const H: f64 = 0.5;
const BOTTOM: P = [H, H, H];
const TOP: P = [1.0, 1.0, 1.0];
const E1: P = [1.0, H, H];
const E2: P = [H, 1.0, H];
const E3: P = [H, H, 1.0];

const LINES: [(&str, P, P); 7] = [
    ("diagonal", BOTTOM, TOP),
    ("axis_s1", BOTTOM, E1),
    ("axis_s2", BOTTOM, E2),
    ("axis_s3", BOTTOM, E3),
    ("biseparable_A_BC", E1, TOP),
    ("biseparable_B_CA", E2, TOP),
    ("biseparable_C_AB", E3, TOP),
];

const TRIANGLES: [(&str, [P; 3]); 9] = [
    ("slice_s1", [BOTTOM, E3, TOP]),
    ("slice_s2", [BOTTOM, E2, TOP]),
    ("slice_s3", [BOTTOM, E1, TOP]),
    ("facet_s1+s2-s3", [E1, E2, TOP]),
    ("facet_s1+s3-s2", [E1, E3, TOP]),
    ("facet_s2+s3-s1", [E2, E3, TOP]),
    ("lower_s1", [BOTTOM, E2, E3]),
    ("lower_s2", [BOTTOM, E1, E3]),
    ("lower_s3", [BOTTOM, E1, E2]),
];

fn lerp(p: P, q: P, r: P, u: f64, v: f64) -> P {
    [0, 1, 2].map(|k| p[k] + (q[k] - p[k]) * u + (r[k] - p[k]) * v)
}

/// Plot data for the polytope. Lines carry `resolution` evenly spaced
/// points. Each triangle is split into `(resolution − 1)²` sub-triangles,
/// written as consecutive vertex triples (`index = 3·triangle + corner`).
pub fn mesh_rows(resolution: usize) -> CliResult<Vec<MeshRow>> {
    if resolution < 2 {
        return Err(CliError::Input("resolution must be at least 2".into()));
    }
    let n = resolution - 1;
    let step = |i: usize| i as f64 / n as f64;
    let mut rows = Vec::new();
    for (element, p, q) in LINES {
        for i in 0..=n {
            rows.push(MeshRow {
                element,
                kind: "line",
                index: i,
                s: lerp(p, q, p, step(i), 0.0),
            });
        }
    }
    for (element, [p, q, r]) in TRIANGLES {
        let at = |i: usize, j: usize| lerp(p, q, r, step(i), step(j));
        let mut tris = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n - i {
                tris.push([at(i, j), at(i + 1, j), at(i, j + 1)]);
                if i + j + 1 < n {
                    tris.push([at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)]);
                }
            }
        }
        for (t, tri) in tris.iter().enumerate() {
            for (c, &s) in tri.iter().enumerate() {
                rows.push(MeshRow {
                    element,
                    kind: "triangle",
                    index: 3 * t + c,
                    s,
                });
            }
        }
    }
    Ok(rows)
}

pub fn mesh_csv(rows: &[MeshRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(MESH_HEADER).expect("in-memory write");
    for r in rows {
        w.write_record([
            r.element.to_string(),
            r.kind.to_string(),
            r.index.to_string(),
            fmt_sig(r.s[0], 12),
            fmt_sig(r.s[1], 12),
            fmt_sig(r.s[2], 12),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ASCII output")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(fmt_sig(2.0 / 3.0, 12), "0.666666666667");
        assert_eq!(fmt_sig(1.0, 12), "1.00000000000");
        assert_eq!(fmt_sig(0.5, 12), "0.500000000000");
        assert_eq!(fmt_sig(0.0, 12), "0");
    }

    #[test]
    fn mesh_resolution_two() {
        let rows = mesh_rows(2).unwrap();
        let diag: Vec<_> = rows.iter().filter(|r| r.element == "diagonal").collect();
        assert_eq!(diag.len(), 2);
        assert_eq!(diag[0].s, BOTTOM);
        assert_eq!(diag[1].s, TOP);
        let facet: Vec<P> = rows.iter().filter(|r| r.element == "facet_s1+s2-s3").map(|r| r.s).collect();
        assert_eq!(facet.len(), 3);
        for v in [TOP, E1, E2] {
            assert!(facet.contains(&v));
        }
    }

    #[test]
    fn triangle_counts() {
        for res in 2..6 {
            let rows = mesh_rows(res).unwrap();
            let n = rows.iter().filter(|r| r.element == "slice_s1").count();
            assert_eq!(n, 3 * (res - 1) * (res - 1));
        }
        assert!(mesh_rows(1).is_err());
    }

    #[test]
    fn sampling_is_independent_of_sharding() {
        let opts = ClassifyOptions::default();
        let (all, _) = sample_records(10, 5, opts).unwrap();
        let tail = sample_range(5, 7..10, opts).unwrap();
        assert_eq!(&all[7..], &tail[..]);
        assert!(sample_records(0, 5, opts).is_err());
    }
}
