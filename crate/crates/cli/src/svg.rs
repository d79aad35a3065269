//! SVG rendering of rank-2 tilings and height-1 fan slices.
//!
//! The picture plane uses the metric embedding `x -> L^T x` from a floating
//! Cholesky factor of the form, so hexagonal tilings look hexagonal. This is
//! presentation only; every exported number lives in the JSON documents.

use num_traits::ToPrimitive;
use voronoi_fans::fan::Fan;
use voronoi_fans::lattice::GramForm;
use voronoi_fans::tilings::CellComplex;
use voronoi_fans::Int;

fn chol2(b: &GramForm<Int>) -> [[f64; 2]; 2] {
    let e = b.entries();
    let a = e[0][0].to_f64().unwrap_or(1.0);
    let c = e[0][1].to_f64().unwrap_or(0.0);
    let d = e[1][1].to_f64().unwrap_or(1.0);
    let l11 = a.sqrt();
    let l21 = c / l11;
    let l22 = (d - l21 * l21).sqrt();
    [[l11, 0.0], [l21, l22]]
}

fn embed(l: &[[f64; 2]; 2], x: f64, y: f64) -> (f64, f64) {
    // Row-vector times L: preserves the form as the Euclidean dot product.
    (x * l[0][0] + y * l[1][0], -(y * l[1][1]))
}

fn fmt(v: f64) -> String {
    format!("{v:.4}")
}

fn coord_id(parts: &[String]) -> String {
    parts.join("_").replace('/', "o")
}

/// Rank-2 tiling picture: lattice points, Delaunay edges, Voronoi edges.
pub fn tiling_svg(b: &GramForm<Int>, complex: &CellComplex<Int>) -> String {
    let l = chol2(b);
    let mut min_x = f64::MAX;
    let mut max_x = f64::MIN;
    let mut min_y = f64::MAX;
    let mut max_y = f64::MIN;
    let mut points: Vec<(String, f64, f64)> = Vec::new();
    let mut delaunay_edges: Vec<(String, (f64, f64), (f64, f64))> = Vec::new();
    let mut voronoi_edges: Vec<(String, (f64, f64), (f64, f64))> = Vec::new();
    let mut grow = |p: (f64, f64)| {
        min_x = min_x.min(p.0);
        max_x = max_x.max(p.0);
        min_y = min_y.min(p.1);
        max_y = max_y.max(p.1);
    };
    for (sigma, face) in &complex.pairs {
        match sigma.dim() {
            0 => {
                let v = &sigma.vertices()[0];
                let sx = v.0[0].to_f64().unwrap_or(0.0);
                let sy = v.0[1].to_f64().unwrap_or(0.0);
                let p = embed(&l, sx, sy);
                grow(p);
                let id = coord_id(&["pt".to_string(), v.0[0].to_string(), v.0[1].to_string()]);
                points.push((id, p.0, p.1));
            }
            1 => {
                let a = &sigma.vertices()[0];
                let c = &sigma.vertices()[1];
                let pa = embed(
                    &l,
                    a.0[0].to_f64().unwrap_or(0.0),
                    a.0[1].to_f64().unwrap_or(0.0),
                );
                let pc = embed(
                    &l,
                    c.0[0].to_f64().unwrap_or(0.0),
                    c.0[1].to_f64().unwrap_or(0.0),
                );
                grow(pa);
                grow(pc);
                let id = coord_id(&[
                    "de".to_string(),
                    a.0[0].to_string(),
                    a.0[1].to_string(),
                    c.0[0].to_string(),
                    c.0[1].to_string(),
                ]);
                delaunay_edges.push((id, pa, pc));
                // The dual Voronoi face of an edge is a segment in rank 2.
                if face.vertices.len() == 2 {
                    let va = &face.vertices[0];
                    let vb = &face.vertices[1];
                    let qa = embed(
                        &l,
                        va.0[0].to_f64().unwrap_or(0.0),
                        va.0[1].to_f64().unwrap_or(0.0),
                    );
                    let qb = embed(
                        &l,
                        vb.0[0].to_f64().unwrap_or(0.0),
                        vb.0[1].to_f64().unwrap_or(0.0),
                    );
                    grow(qa);
                    grow(qb);
                    let id = coord_id(&[
                        "ve".to_string(),
                        a.0[0].to_string(),
                        a.0[1].to_string(),
                        c.0[0].to_string(),
                        c.0[1].to_string(),
                    ]);
                    voronoi_edges.push((id, qa, qb));
                }
            }
            _ => {}
        }
    }
    let margin = 0.6;
    let vb = format!(
        "{} {} {} {}",
        fmt(min_x - margin),
        fmt(min_y - margin),
        fmt(max_x - min_x + 2.0 * margin),
        fmt(max_y - min_y + 2.0 * margin)
    );
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{vb}\" width=\"720\" height=\"720\">\n"
    ));
    out.push_str("  <g id=\"voronoi\" stroke=\"#c23b22\" stroke-width=\"0.035\" fill=\"none\">\n");
    for (id, a, c) in &voronoi_edges {
        out.push_str(&format!(
            "    <line id=\"{id}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
            fmt(a.0),
            fmt(a.1),
            fmt(c.0),
            fmt(c.1)
        ));
    }
    out.push_str("  </g>\n");
    out.push_str("  <g id=\"delaunay\" stroke=\"#4477aa\" stroke-width=\"0.02\" fill=\"none\">\n");
    for (id, a, c) in &delaunay_edges {
        out.push_str(&format!(
            "    <line id=\"{id}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
            fmt(a.0),
            fmt(a.1),
            fmt(c.0),
            fmt(c.1)
        ));
    }
    out.push_str("  </g>\n");
    out.push_str("  <g id=\"lattice\" fill=\"#222222\">\n");
    for (id, x, y) in &points {
        out.push_str(&format!(
            "    <circle id=\"{id}\" cx=\"{}\" cy=\"{}\" r=\"0.06\"/>\n",
            fmt(*x),
            fmt(*y)
        ));
    }
    out.push_str("  </g>\n</svg>\n");
    out
}

/// Rank-1 fan picture in the `(lambda, n)` plane, with the height-one line.
pub fn fan_svg_rank1(fan: &Fan<Int>) -> String {
    let mut out = String::new();
    let mut max_abs_x: f64 = 1.0;
    let dir = |g: &Vec<Int>| -> (f64, f64) {
        let n = g[0].to_f64().unwrap_or(1.0);
        let x = g[1].to_f64().unwrap_or(0.0);
        // Scale to height 2 so every ray pierces the height-one line.
        let s = 2.0 / n;
        (x * s, -(2.0))
    };
    for c in &fan.cones {
        for g in &c.generators {
            let (x, _) = dir(g);
            max_abs_x = max_abs_x.max(x.abs());
        }
    }
    let vb = format!(
        "{} -2.4 {} 2.8",
        fmt(-max_abs_x - 0.5),
        fmt(2.0 * max_abs_x + 1.0)
    );
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{vb}\" width=\"720\" height=\"560\">\n"
    ));
    out.push_str("  <g id=\"cones\" fill=\"#aec6e8\" fill-opacity=\"0.55\" stroke=\"none\">\n");
    for (i, c) in fan.cones.iter().enumerate() {
        if c.dim == 2 && c.generators.len() == 2 {
            let a = dir(&c.generators[0]);
            let b = dir(&c.generators[1]);
            out.push_str(&format!(
                "    <polygon id=\"cone_{i}\" points=\"0,0 {},{} {},{}\"/>\n",
                fmt(a.0),
                fmt(a.1),
                fmt(b.0),
                fmt(b.1)
            ));
        }
    }
    out.push_str("  </g>\n");
    out.push_str("  <g id=\"rays\" stroke=\"#333333\" stroke-width=\"0.03\">\n");
    for (i, c) in fan.cones.iter().enumerate() {
        if c.dim == 1 {
            let a = dir(&c.generators[0]);
            out.push_str(&format!(
                "    <line id=\"ray_{i}\" x1=\"0\" y1=\"0\" x2=\"{}\" y2=\"{}\"/>\n",
                fmt(a.0),
                fmt(a.1)
            ));
        }
    }
    out.push_str("  </g>\n");
    out.push_str(&format!(
        "  <line id=\"height_one\" x1=\"{}\" y1=\"-1\" x2=\"{}\" y2=\"-1\" stroke=\"#000000\" stroke-width=\"0.02\"/>\n",
        fmt(-max_abs_x - 0.3),
        fmt(max_abs_x + 0.3)
    ));
    out.push_str("</svg>\n");
    out
}

/// Rank-2 fan picture: the slice of every cone by the height-one plane,
/// which reproduces the Voronoi tiling.
pub fn fan_svg_rank2(b: &GramForm<Int>, fan: &Fan<Int>) -> String {
    let l = chol2(b);
    let slice = |g: &Vec<Int>| -> (f64, f64) {
        let n = g[0].to_f64().unwrap_or(1.0);
        let x = g[1].to_f64().unwrap_or(0.0) / n;
        let y = g[2].to_f64().unwrap_or(0.0) / n;
        embed(&l, x, y)
    };
    let mut min_x = f64::MAX;
    let mut max_x = f64::MIN;
    let mut min_y = f64::MAX;
    let mut max_y = f64::MIN;
    for c in &fan.cones {
        for g in &c.generators {
            let p = slice(g);
            min_x = min_x.min(p.0);
            max_x = max_x.max(p.0);
            min_y = min_y.min(p.1);
            max_y = max_y.max(p.1);
        }
    }
    if min_x > max_x {
        min_x = -1.0;
        max_x = 1.0;
        min_y = -1.0;
        max_y = 1.0;
    }
    let margin = 0.5;
    let vb = format!(
        "{} {} {} {}",
        fmt(min_x - margin),
        fmt(min_y - margin),
        fmt(max_x - min_x + 2.0 * margin),
        fmt(max_y - min_y + 2.0 * margin)
    );
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{vb}\" width=\"720\" height=\"720\">\n"
    ));
    out.push_str("  <g id=\"slices\" stroke=\"#c23b22\" stroke-width=\"0.03\" fill=\"#f5d9c8\" fill-opacity=\"0.4\">\n");
    for (i, c) in fan.cones.iter().enumerate() {
        match c.dim {
            3 => {
                // Order polygon vertices by angle around their centroid.
                let mut pts: Vec<(f64, f64)> = c.generators.iter().map(&slice).collect();
                let cx = pts.iter().map(|p| p.0).sum::<f64>() / pts.len() as f64;
                let cy = pts.iter().map(|p| p.1).sum::<f64>() / pts.len() as f64;
                pts.sort_by(|p, q| {
                    let ap = (p.1 - cy).atan2(p.0 - cx);
                    let aq = (q.1 - cy).atan2(q.0 - cx);
                    ap.partial_cmp(&aq).expect("finite angles")
                });
                let body: Vec<String> = pts
                    .iter()
                    .map(|p| format!("{},{}", fmt(p.0), fmt(p.1)))
                    .collect();
                out.push_str(&format!(
                    "    <polygon id=\"cone_{i}\" points=\"{}\"/>\n",
                    body.join(" ")
                ));
            }
            2 => {
                let a = slice(&c.generators[0]);
                let d = slice(&c.generators[1]);
                out.push_str(&format!(
                    "    <line id=\"cone_{i}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                    fmt(a.0),
                    fmt(a.1),
                    fmt(d.0),
                    fmt(d.1)
                ));
            }
            1 => {
                let a = slice(&c.generators[0]);
                out.push_str(&format!(
                    "    <circle id=\"cone_{i}\" cx=\"{}\" cy=\"{}\" r=\"0.05\"/>\n",
                    fmt(a.0),
                    fmt(a.1)
                ));
            }
            _ => {}
        }
    }
    out.push_str("  </g>\n</svg>\n");
    out
}
