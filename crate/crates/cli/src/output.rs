//! JSON documents and input parsing. All rationals are rendered as exact
//! `p/q` strings; integers are JSON integers. Field order is fixed by the
//! struct declarations so identical inputs give byte-identical output.

use num_traits::ToPrimitive;
use serde::Serialize;
use voronoi_fans::fan::{Cone, Fan, OracleReport};
use voronoi_fans::lattice::{GramForm, LatticeVector, RationalVector};
use voronoi_fans::scalar::{fmt_rat, parse_rat};
use voronoi_fans::semigroup::{NormalityReport, SaturationOutcome};
use voronoi_fans::suites::SuiteReport;
use voronoi_fans::symbols::RingElement;
use voronoi_fans::tilings::{CellComplex, Halfspace, VoronoiFace, Window};
use voronoi_fans::{Int, Rat};

pub const SCHEMA: &str = "voronoi-fans/1";

pub fn int_to_i64(v: &Int) -> i64 {
    v.to_i64()
        .expect("value exceeds the supported integer range")
}

pub fn ints(v: &LatticeVector<Int>) -> Vec<i64> {
    v.0.iter().map(int_to_i64).collect()
}

pub fn rats(v: &RationalVector<Int>) -> Vec<String> {
    v.0.iter().map(fmt_rat).collect()
}

/// Canonical text form of a test-ring element, e.g. `1 - 3/4*e1`.
pub fn render_ring_element(e: &RingElement<Int>) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (exps, coeff) in e.terms() {
        let vars: Vec<String> = exps
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| {
                if k == 1 {
                    format!("e{}", i + 1)
                } else {
                    format!("e{}^{}", i + 1, k)
                }
            })
            .collect();
        let coeff_str = fmt_rat(coeff);
        let term = if vars.is_empty() {
            coeff_str
        } else if coeff_str == "1" {
            vars.join("*")
        } else if coeff_str == "-1" {
            format!("-{}", vars.join("*"))
        } else {
            format!("{}*{}", coeff_str, vars.join("*"))
        };
        if out.is_empty() {
            out = term;
        } else if let Some(stripped) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    out
}

// ---- input parsing ----

pub fn parse_gram(text: &str) -> Result<GramForm<Int>, String> {
    let rows: Vec<Vec<i64>> =
        serde_json::from_str(text).map_err(|e| format!("gram matrix is not JSON: {e}"))?;
    let entries: Vec<Vec<Int>> = rows
        .iter()
        .map(|row| row.iter().map(|&x| Int::from(x)).collect())
        .collect();
    GramForm::new(entries).map_err(|e| e.to_string())
}

pub fn parse_point(text: &str, rank: usize) -> Result<RationalVector<Int>, String> {
    let coords: Vec<Rat> = text
        .split(',')
        .map(|part| parse_rat::<Int>(part).ok_or_else(|| format!("bad rational `{part}`")))
        .collect::<Result<_, _>>()?;
    if coords.len() != rank {
        return Err(format!(
            "point has {} coordinates, form has rank {rank}",
            coords.len()
        ));
    }
    Ok(RationalVector(coords))
}

pub fn parse_window(text: &str, rank: usize) -> Result<(Window<Int>, Vec<(i64, i64)>), String> {
    let ranges: Vec<(i64, i64)> = if text.trim_start().starts_with('[') {
        serde_json::from_str::<Vec<(i64, i64)>>(text)
            .map_err(|e| format!("window is not JSON ranges: {e}"))?
    } else {
        text.split(',')
            .map(|part| {
                let (lo, hi) = part
                    .split_once("..")
                    .ok_or_else(|| format!("bad range `{part}`, expected lo..hi"))?;
                let lo: i64 = lo
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad integer `{lo}`"))?;
                let hi: i64 = hi
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad integer `{hi}`"))?;
                Ok::<(i64, i64), String>((lo, hi))
            })
            .collect::<Result<_, _>>()?
    };
    if ranges.len() != rank {
        return Err(format!(
            "window has {} ranges, form has rank {rank}",
            ranges.len()
        ));
    }
    let window = Window::new(
        ranges.iter().map(|&(lo, _)| Int::from(lo)).collect(),
        ranges.iter().map(|&(_, hi)| Int::from(hi)).collect(),
    );
    Ok((window, ranges))
}

pub fn parse_chars(text: &str) -> Result<Vec<Vec<Int>>, String> {
    let rows: Vec<Vec<i64>> =
        serde_json::from_str(text).map_err(|e| format!("chars is not a JSON list: {e}"))?;
    Ok(rows
        .iter()
        .map(|row| row.iter().map(|&x| Int::from(x)).collect())
        .collect())
}

// ---- documents ----

#[derive(Serialize)]
pub struct StationsDoc {
    pub schema: &'static str,
    pub command: &'static str,
    pub gram: Vec<Vec<i64>>,
    pub point: Vec<String>,
    pub stations: Vec<Vec<i64>>,
    pub dist2: String,
}

#[derive(Serialize)]
pub struct HalfspaceDoc {
    pub normal: Vec<i64>,
    pub offset: String,
}

#[derive(Serialize)]
pub struct DelaunayDoc {
    pub vertices: Vec<Vec<i64>>,
    pub dim: usize,
}

#[derive(Serialize)]
pub struct VoronoiDoc {
    pub vertices: Vec<Vec<String>>,
    pub halfspaces: Vec<HalfspaceDoc>,
    pub dim: usize,
}

#[derive(Serialize)]
pub struct CellDoc {
    pub delaunay: DelaunayDoc,
    pub voronoi: VoronoiDoc,
}

#[derive(Serialize)]
pub struct ClassDoc {
    pub representative: Vec<Vec<i64>>,
    pub dim: usize,
    pub count: usize,
}

#[derive(Serialize)]
pub struct TilingDoc {
    pub schema: &'static str,
    pub command: &'static str,
    pub gram: Vec<Vec<i64>>,
    pub window: Vec<(i64, i64)>,
    pub cells: Vec<CellDoc>,
    pub classes: Vec<ClassDoc>,
}

#[derive(Serialize)]
pub struct ConeDoc {
    pub id: usize,
    pub generators: Vec<Vec<i64>>,
    pub dim: usize,
    pub tag: Vec<Vec<i64>>,
}

#[derive(Serialize)]
pub struct OracleDoc {
    pub samples: usize,
    pub pair_checks: usize,
    pub mismatches: usize,
    pub details: Vec<String>,
}

#[derive(Serialize)]
pub struct FanDoc {
    pub schema: &'static str,
    pub command: &'static str,
    pub gram: Vec<Vec<i64>>,
    pub window: Vec<(i64, i64)>,
    /// Sign convention for locating one-parameter subgroups in the fan.
    pub convention: &'static str,
    pub cones: Vec<ConeDoc>,
    pub incidence: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleDoc>,
}

#[derive(Serialize)]
pub struct GroupDoc {
    pub schema: &'static str,
    pub command: &'static str,
    pub variant: String,
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<String>,
    pub w: String,
    pub t: Vec<String>,
    pub lambda: Vec<i64>,
}

#[derive(Serialize)]
pub struct SymbolDoc {
    pub schema: &'static str,
    pub command: &'static str,
    pub kind: &'static str,
    pub value: String,
}

#[derive(Serialize)]
pub struct KernelDoc {
    pub schema: &'static str,
    pub command: &'static str,
    pub divisors: Vec<i64>,
    pub order: i64,
}

#[derive(Serialize)]
pub struct VertexDoc {
    pub vertex: Vec<i64>,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<i64>>,
}

#[derive(Serialize)]
pub struct SaturationDoc {
    pub schema: &'static str,
    pub command: &'static str,
    pub chars: Vec<Vec<i64>>,
    pub bound: u32,
    pub normal: bool,
    pub vertices: Vec<VertexDoc>,
}

#[derive(Serialize)]
pub struct SuiteDoc {
    pub name: String,
    pub cases: u64,
    pub failures: Vec<String>,
}

#[derive(Serialize)]
pub struct CheckDoc {
    pub schema: &'static str,
    pub command: &'static str,
    pub suite: String,
    pub seed: u64,
    pub ok: bool,
    pub suites: Vec<SuiteDoc>,
}

// ---- document builders ----

pub fn gram_doc(b: &GramForm<Int>) -> Vec<Vec<i64>> {
    b.entries()
        .iter()
        .map(|row| row.iter().map(int_to_i64).collect())
        .collect()
}

fn halfspace_doc(h: &Halfspace<Int>) -> HalfspaceDoc {
    HalfspaceDoc {
        normal: h.normal.iter().map(int_to_i64).collect(),
        offset: fmt_rat(&h.offset),
    }
}

fn voronoi_doc(f: &VoronoiFace<Int>) -> VoronoiDoc {
    VoronoiDoc {
        vertices: f.vertices.iter().map(rats).collect(),
        halfspaces: f.halfspaces.iter().map(halfspace_doc).collect(),
        dim: f.dim,
    }
}

pub fn tiling_doc(
    b: &GramForm<Int>,
    ranges: &[(i64, i64)],
    complex: &CellComplex<Int>,
) -> TilingDoc {
    TilingDoc {
        schema: SCHEMA,
        command: "tiling",
        gram: gram_doc(b),
        window: ranges.to_vec(),
        cells: complex
            .pairs
            .iter()
            .map(|(d, f)| CellDoc {
                delaunay: DelaunayDoc {
                    vertices: d.vertices().iter().map(ints).collect(),
                    dim: d.dim(),
                },
                voronoi: voronoi_doc(f),
            })
            .collect(),
        classes: complex
            .classes
            .iter()
            .map(|c| ClassDoc {
                representative: c.representative.vertices().iter().map(ints).collect(),
                dim: c.representative.dim(),
                count: c.members_in_window,
            })
            .collect(),
    }
}

fn cone_doc(id: usize, c: &Cone<Int>) -> ConeDoc {
    ConeDoc {
        id,
        generators: c
            .generators
            .iter()
            .map(|g| g.iter().map(int_to_i64).collect())
            .collect(),
        dim: c.dim,
        tag: c.tag.vertices().iter().map(ints).collect(),
    }
}

pub fn fan_doc(
    b: &GramForm<Int>,
    ranges: &[(i64, i64)],
    fan: &Fan<Int>,
    oracle: Option<&OracleReport>,
) -> FanDoc {
    FanDoc {
        schema: SCHEMA,
        command: "fan",
        gram: gram_doc(b),
        window: ranges.to_vec(),
        convention:
            "the subgroup (n,lambda) belongs to the cone over (1, F) when -lambda/n lies in F",
        cones: fan
            .cones
            .iter()
            .enumerate()
            .map(|(i, c)| cone_doc(i, c))
            .collect(),
        incidence: fan.incidence.clone(),
        oracle: oracle.map(|r| OracleDoc {
            samples: r.samples,
            pair_checks: r.pair_checks,
            mismatches: r.mismatches.len(),
            details: r.mismatches.clone(),
        }),
    }
}

pub fn kernel_doc(divisors: &[Int], order: &Int) -> KernelDoc {
    KernelDoc {
        schema: SCHEMA,
        command: "kernel",
        divisors: divisors.iter().map(int_to_i64).collect(),
        order: int_to_i64(order),
    }
}

pub fn saturation_doc(
    chars: &[Vec<Int>],
    bound: u32,
    report: &NormalityReport<Int>,
) -> SaturationDoc {
    SaturationDoc {
        schema: SCHEMA,
        command: "saturation",
        chars: chars
            .iter()
            .map(|c| c.iter().map(int_to_i64).collect())
            .collect(),
        bound,
        normal: report.normal,
        vertices: report
            .vertex_reports
            .iter()
            .map(|v| match &v.outcome {
                SaturationOutcome::Saturated => VertexDoc {
                    vertex: v.vertex.iter().map(int_to_i64).collect(),
                    status: "saturated",
                    witness: None,
                },
                SaturationOutcome::Witness(w) => VertexDoc {
                    vertex: v.vertex.iter().map(int_to_i64).collect(),
                    status: "witness",
                    witness: Some(w.iter().map(int_to_i64).collect()),
                },
            })
            .collect(),
    }
}

pub fn check_doc(suite: &str, seed: u64, reports: &[SuiteReport]) -> CheckDoc {
    CheckDoc {
        schema: SCHEMA,
        command: "check",
        suite: suite.to_string(),
        seed,
        ok: reports.iter().all(SuiteReport::ok),
        suites: reports
            .iter()
            .map(|r| SuiteDoc {
                name: r.name.clone(),
                cases: r.cases,
                failures: r.failures.clone(),
            })
            .collect(),
    }
}
