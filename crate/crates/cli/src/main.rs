//! `vfan`: exact Voronoi/Delaunay tilings of a Gram form, the fan over the
//! tiling, central-extension arithmetic, tame and Contou-Carrere symbols,
//! kernel divisors, saturation reports, and the randomized property suites.
//!
//! Exit codes: 0 on success, 1 on computation errors or failed properties,
//! 2 on usage and validation failures.

mod args;
mod output;
mod svg;

use args::Options;
use output::*;
use voronoi_fans::exprlang::{eval_group, eval_series, parse_group, parse_series, GroupValue};
use voronoi_fans::extension::Variant;
use voronoi_fans::fan::{fan_build, fan_oracle_check, smith_kernel, OneParamSubgroup};
use voronoi_fans::lattice::{stations_with_distance, LatticeVector};
use voronoi_fans::rng::SplitMix64;
use voronoi_fans::scalar::fmt_rat;
use voronoi_fans::semigroup::orbit_polytope_normality;
use voronoi_fans::suites::run_suite;
use voronoi_fans::symbols::{cc_symbol, tame_symbol};
use voronoi_fans::tilings::enumerate_cells;
use voronoi_fans::Int;

enum CliError {
    /// Bad flags or invalid input data: exit 2.
    Usage(String),
    /// The computation itself failed or a property did not hold: exit 1.
    Compute(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Compute(m) => m,
        }
    }
}

fn usage() -> String {
    "usage: vfan <command> [flags]\n\
     commands:\n\
       stations   --gram M --point P\n\
       tiling     --gram M --window W [--svg PATH]\n\
       fan        --gram M --window W [--oracle K] [--seed S] [--svg PATH]\n\
       group      --gram M --variant B|2B --expr E\n\
       symbol     --expr-f E --expr-g E [--tame]\n\
       kernel     --gram M\n\
       saturation --chars C --bound N\n\
       check      --suite all|lattice|ext|fan|symbols|parser [--seed S]\n\
     every command also accepts --config FILE (JSON, flags win)"
        .to_string()
}

fn emit<T: serde::Serialize>(doc: &T) {
    println!(
        "{}",
        serde_json::to_string(doc).expect("documents serialize")
    );
}

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match run(&argv) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("vfan: {}", e.message());
            std::process::exit(e.code());
        }
    }
}

fn run(argv: &[String]) -> Result<(), CliError> {
    let Some(command) = argv.first() else {
        return Err(CliError::Usage(usage()));
    };
    let opts = Options::parse(&argv[1..]).map_err(|e| CliError::Usage(e.to_string()))?;
    match command.as_str() {
        "stations" => cmd_stations(&opts),
        "tiling" => cmd_tiling(&opts),
        "fan" => cmd_fan(&opts),
        "group" => cmd_group(&opts),
        "symbol" => cmd_symbol(&opts),
        "kernel" => cmd_kernel(&opts),
        "saturation" => cmd_saturation(&opts),
        "check" => cmd_check(&opts),
        other => Err(CliError::Usage(format!(
            "unknown command `{other}`\n{}",
            usage()
        ))),
    }
}

fn req(opts: &Options, key: &str) -> Result<String, CliError> {
    opts.require(key)
        .map(str::to_string)
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn validated_gram(opts: &Options) -> Result<voronoi_fans::lattice::GramForm<Int>, CliError> {
    parse_gram(&req(opts, "gram")?).map_err(CliError::Usage)
}

fn cmd_stations(opts: &Options) -> Result<(), CliError> {
    let b = validated_gram(opts)?;
    let point = parse_point(&req(opts, "point")?, b.rank()).map_err(CliError::Usage)?;
    let (pts, dist2) =
        stations_with_distance(&b, &point).map_err(|e| CliError::Compute(e.to_string()))?;
    emit(&StationsDoc {
        schema: SCHEMA,
        command: "stations",
        gram: gram_doc(&b),
        point: rats(&point),
        stations: pts.iter().map(ints).collect(),
        dist2: fmt_rat(&dist2),
    });
    Ok(())
}

fn cmd_tiling(opts: &Options) -> Result<(), CliError> {
    let b = validated_gram(opts)?;
    let (window, ranges) =
        parse_window(&req(opts, "window")?, b.rank()).map_err(CliError::Usage)?;
    if opts.get("svg").is_some() && b.rank() != 2 {
        return Err(CliError::Usage(
            "SVG rendering requires a rank-2 form".to_string(),
        ));
    }
    let complex = enumerate_cells(&b, &window).map_err(|e| CliError::Usage(e.to_string()))?;
    if let Some(path) = opts.get("svg") {
        let art = svg::tiling_svg(&b, &complex);
        std::fs::write(path, art)
            .map_err(|e| CliError::Compute(format!("cannot write {path}: {e}")))?;
    }
    emit(&tiling_doc(&b, &ranges, &complex));
    Ok(())
}

fn cmd_fan(opts: &Options) -> Result<(), CliError> {
    let b = validated_gram(opts)?;
    let (window, ranges) =
        parse_window(&req(opts, "window")?, b.rank()).map_err(CliError::Usage)?;
    if opts.get("svg").is_some() && !(b.rank() == 1 || b.rank() == 2) {
        return Err(CliError::Usage(
            "SVG rendering requires a rank-1 or rank-2 form".to_string(),
        ));
    }
    let fan = fan_build(&b, &window).map_err(|e| CliError::Usage(e.to_string()))?;
    let oracle = match opts.get("oracle") {
        None => None,
        Some(k) => {
            let k: usize = k
                .parse()
                .map_err(|_| CliError::Usage(format!("bad oracle count `{k}`")))?;
            let seed: u64 = match opts.get("seed") {
                None => 0,
                Some(s) => s
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad seed `{s}`")))?,
            };
            let mut rng = SplitMix64::new(seed);
            let samples: Vec<OneParamSubgroup<Int>> = (0..k)
                .map(|_| {
                    let n = rng.range_i64(1, 3);
                    let lambda = LatticeVector(
                        ranges
                            .iter()
                            .map(|&(lo, hi)| Int::from(rng.range_i64(-n * hi, -n * lo)))
                            .collect(),
                    );
                    OneParamSubgroup::new(Int::from(n), lambda)
                })
                .collect();
            Some(
                fan_oracle_check(&b, &window, &samples)
                    .map_err(|e| CliError::Compute(e.to_string()))?,
            )
        }
    };
    if let Some(path) = opts.get("svg") {
        let art = if b.rank() == 1 {
            svg::fan_svg_rank1(&fan)
        } else {
            svg::fan_svg_rank2(&b, &fan)
        };
        std::fs::write(path, art)
            .map_err(|e| CliError::Compute(format!("cannot write {path}: {e}")))?;
    }
    let failed = oracle.as_ref().is_some_and(|r| !r.ok());
    emit(&fan_doc(&b, &ranges, &fan, oracle.as_ref()));
    if failed {
        return Err(CliError::Compute(
            "fan oracle reported mismatches".to_string(),
        ));
    }
    Ok(())
}

fn cmd_group(opts: &Options) -> Result<(), CliError> {
    let b = validated_gram(opts)?;
    let variant = match req(opts, "variant")?.as_str() {
        "B" => Variant::B,
        "2B" => Variant::TwoB,
        other => return Err(CliError::Usage(format!("unknown variant `{other}`"))),
    };
    let expr = parse_group::<Int>(&req(opts, "expr")?, b.rank())
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let value = eval_group(&b, variant, &expr).map_err(|e| CliError::Compute(e.to_string()))?;
    let variant_name = match variant {
        Variant::B => "B",
        Variant::TwoB => "2B",
    };
    let doc = match value {
        GroupValue::Ext(g) => GroupDoc {
            schema: SCHEMA,
            command: "group",
            variant: variant_name.to_string(),
            kind: "ext",
            s: None,
            w: fmt_rat(&g.w),
            t: g.t.iter().map(fmt_rat).collect(),
            lambda: ints(&g.lambda),
        },
        GroupValue::Semidirect(sd) => GroupDoc {
            schema: SCHEMA,
            command: "group",
            variant: variant_name.to_string(),
            kind: "semidirect",
            s: Some(fmt_rat(&sd.s)),
            w: fmt_rat(&sd.g.w),
            t: sd.g.t.iter().map(fmt_rat).collect(),
            lambda: ints(&sd.g.lambda),
        },
    };
    emit(&doc);
    Ok(())
}

fn cmd_symbol(opts: &Options) -> Result<(), CliError> {
    let prog_f =
        parse_series::<Int>(&req(opts, "expr-f")?).map_err(|e| CliError::Usage(e.to_string()))?;
    let prog_g =
        parse_series::<Int>(&req(opts, "expr-g")?).map_err(|e| CliError::Usage(e.to_string()))?;
    if prog_f.decl != prog_g.decl {
        return Err(CliError::Usage(
            "the two series must declare the same ring and truncation".to_string(),
        ));
    }
    let (ring, f) = eval_series(&prog_f).map_err(|e| CliError::Compute(e.to_string()))?;
    let (_, g) = eval_series(&prog_g).map_err(|e| CliError::Compute(e.to_string()))?;
    let doc = if opts.has_flag("tame") {
        let value = tame_symbol(&ring, &f, &g).map_err(|e| CliError::Compute(e.to_string()))?;
        SymbolDoc {
            schema: SCHEMA,
            command: "symbol",
            kind: "tame",
            value: fmt_rat(&value),
        }
    } else {
        let value = cc_symbol(&ring, &f, &g).map_err(|e| CliError::Compute(e.to_string()))?;
        SymbolDoc {
            schema: SCHEMA,
            command: "symbol",
            kind: "contou-carrere",
            value: render_ring_element(&value),
        }
    };
    emit(&doc);
    Ok(())
}

fn cmd_kernel(opts: &Options) -> Result<(), CliError> {
    let b = validated_gram(opts)?;
    let divisors = smith_kernel(&b);
    emit(&kernel_doc(&divisors, &b.det()));
    Ok(())
}

fn cmd_saturation(opts: &Options) -> Result<(), CliError> {
    let chars = parse_chars(&req(opts, "chars")?).map_err(CliError::Usage)?;
    let bound: u32 = req(opts, "bound")?
        .parse()
        .map_err(|_| CliError::Usage("bad --bound value".to_string()))?;
    let report =
        orbit_polytope_normality(&chars, bound).map_err(|e| CliError::Usage(e.to_string()))?;
    emit(&saturation_doc(&chars, bound, &report));
    Ok(())
}

fn cmd_check(opts: &Options) -> Result<(), CliError> {
    let suite = req(opts, "suite")?;
    let seed: u64 = match opts.get("seed") {
        None => 0,
        Some(s) => s
            .parse()
            .map_err(|_| CliError::Usage(format!("bad seed `{s}`")))?,
    };
    let Some(reports) = run_suite(&suite, seed) else {
        return Err(CliError::Usage(format!("unknown suite `{suite}`")));
    };
    let doc = check_doc(&suite, seed, &reports);
    let ok = doc.ok;
    emit(&doc);
    if !ok {
        return Err(CliError::Compute(
            "property suite reported failures".to_string(),
        ));
    }
    Ok(())
}
