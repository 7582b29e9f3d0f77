//! Minimal SVG renderers. Coordinates are printed with two decimals so the
//! output is byte-stable.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use circlust::geometry::replicate_polar;
use circlust::{Dendrogram, PolarPoint, ReconstructionParams, OUTLIER};

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];
const OUTLIER_COLOR: &str = "#b0b0b0";
const MARGIN: f64 = 40.0;

pub fn color(label: i64) -> &'static str {
    if label == OUTLIER {
        OUTLIER_COLOR
    } else {
        PALETTE[label.rem_euclid(PALETTE.len() as i64) as usize]
    }
}

fn open(width: f64, height: f64, title: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="20" text-anchor="middle" font-size="13">{title}</text>"#,
        width / 2.0
    );
    s
}

fn dot(s: &mut String, x: f64, y: f64, label: i64) {
    let _ = writeln!(
        s,
        r#"<circle class="point" cx="{x:.2}" cy="{y:.2}" r="4" fill="{}" stroke="black" stroke-width="0.5" data-label="{label}"/>"#,
        color(label)
    );
}

fn legend(s: &mut String, labels: &[i64], x: f64, y: f64) {
    let mut seen: Vec<i64> = labels.to_vec();
    seen.sort_unstable();
    seen.dedup();
    for (row, l) in seen.iter().enumerate() {
        let yy = y + row as f64 * 16.0;
        let _ = writeln!(
            s,
            r#"<rect x="{x:.2}" y="{:.2}" width="10" height="10" fill="{}"/><text x="{:.2}" y="{:.2}">{}</text>"#,
            yy - 9.0,
            color(*l),
            x + 14.0,
            yy,
            if *l == OUTLIER { "outlier".to_string() } else { format!("cluster {l}") }
        );
    }
}

fn max_radius(points: &[PolarPoint]) -> f64 {
    let m = points.iter().map(|p| p.r()).fold(0.0, f64::max);
    if m > 0.0 {
        m
    } else {
        1.0
    }
}

/// Points drawn in the Cartesian plane with a reference ring at the largest
/// radius.
pub fn polar_scatter(points: &[PolarPoint], labels: &[i64]) -> String {
    let size = 480.0;
    let center = size / 2.0;
    let scale = (center - MARGIN) / max_radius(points);
    let mut s = open(size + 120.0, size, "polar scatter");
    let ring = center - MARGIN;
    let _ = writeln!(
        s,
        r##"<circle cx="{center:.2}" cy="{center:.2}" r="{ring:.2}" fill="none" stroke="#cccccc"/>"##
    );
    let _ = writeln!(
        s,
        r##"<line x1="{:.2}" y1="{center:.2}" x2="{:.2}" y2="{center:.2}" stroke="#cccccc"/><line x1="{center:.2}" y1="{:.2}" x2="{center:.2}" y2="{:.2}" stroke="#cccccc"/>"##,
        MARGIN,
        size - MARGIN,
        MARGIN,
        size - MARGIN
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}">θ = 0</text>"#,
        size - MARGIN + 4.0,
        center - 4.0
    );
    for (p, &l) in points.iter().zip(labels) {
        let c = p.to_cartesian();
        dot(&mut s, center + c.x * scale, center - c.y * scale, l);
    }
    legend(&mut s, labels, size + 10.0, MARGIN);
    s.push_str("</svg>\n");
    s
}

/// The replicated unrolled plane, with dashed lines at period boundaries.
pub fn plane_scatter(points: &[PolarPoint], labels: &[i64], params: &ReconstructionParams) -> String {
    let (width, height) = (900.0, 360.0);
    let plane_w = params.periods() as f64 * params.period_width();
    let sx = (width - 2.0 * MARGIN) / plane_w;
    let sy = (height - 2.0 * MARGIN) / max_radius(points);
    let mut s = open(width + 120.0, height, "replicated plane");
    let base = height - MARGIN;
    let _ = writeln!(
        s,
        r#"<line x1="{MARGIN:.2}" y1="{base:.2}" x2="{:.2}" y2="{base:.2}" stroke="black"/><line x1="{MARGIN:.2}" y1="{MARGIN:.2}" x2="{MARGIN:.2}" y2="{base:.2}" stroke="black"/>"#,
        width - MARGIN
    );
    for k in 0..params.periods() {
        let x0 = MARGIN + k as f64 * params.period_width() * sx;
        if k > 0 {
            let _ = writeln!(
                s,
                r##"<line class="period" x1="{x0:.2}" y1="{MARGIN:.2}" x2="{x0:.2}" y2="{base:.2}" stroke="#888888" stroke-dasharray="4 3"/>"##
            );
        }
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">period {}</text>"#,
            x0 + params.period_width() * sx / 2.0,
            base + 16.0,
            k + 1
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">x' = Rθ (R = {}, period width {:.3})</text>"#,
        width / 2.0,
        height - 6.0,
        params.radius(),
        params.radius() * TAU
    );
    for rp in replicate_polar(points, params) {
        dot(
            &mut s,
            MARGIN + rp.point.x_prime * sx,
            base - rp.point.y_prime * sy,
            labels[rp.origin],
        );
    }
    legend(&mut s, labels, width + 10.0, MARGIN);
    s.push_str("</svg>\n");
    s
}

/// Dendrogram with leaves along the bottom and a height axis on the left.
pub fn dendrogram(d: &Dendrogram, names: Option<&[String]>) -> String {
    let n = d.n_leaves();
    let (width, height) = ((n as f64 * 24.0).max(320.0) + 2.0 * MARGIN, 400.0);
    let top = d.merges().iter().map(|m| m.height).fold(0.0, f64::max);
    let top = if top > 0.0 { top } else { 1.0 };
    let base = height - MARGIN - 20.0;
    let sy = (base - MARGIN) / top;
    let step = (width - 2.0 * MARGIN - 30.0) / n as f64;
    let left = MARGIN + 30.0;
    let mut s = open(width, height, "dendrogram");

    let mut x = vec![0.0; 2 * n - 1];
    let mut y = vec![base; 2 * n - 1];
    for (pos, leaf) in d.leaf_order().into_iter().enumerate() {
        x[leaf] = left + (pos as f64 + 0.5) * step;
        let name = names.map_or_else(|| leaf.to_string(), |v| v[leaf].clone());
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{name}</text>"#,
            x[leaf],
            base + 14.0
        );
    }
    for m in d.merges() {
        let h = base - m.height * sy;
        x[m.node] = (x[m.node_a] + x[m.node_b]) / 2.0;
        y[m.node] = h;
        let _ = writeln!(
            s,
            r#"<path class="merge" d="M{:.2},{:.2} V{h:.2} H{:.2} V{:.2}" fill="none" stroke="black"/>"#,
            x[m.node_a], y[m.node_a], x[m.node_b], y[m.node_b]
        );
    }

    let _ = writeln!(
        s,
        r#"<line x1="{MARGIN:.2}" y1="{MARGIN:.2}" x2="{MARGIN:.2}" y2="{base:.2}" stroke="black"/>"#
    );
    for t in 0..=4 {
        let v = top * t as f64 / 4.0;
        let yy = base - v * sy;
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{yy:.2}" x2="{MARGIN:.2}" y2="{yy:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{v:.3}</text>"#,
            MARGIN - 4.0,
            MARGIN - 6.0,
            yy + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="12" y="{:.2}" transform="rotate(-90 12 {:.2})" text-anchor="middle">height</text>"#,
        (MARGIN + base) / 2.0,
        (MARGIN + base) / 2.0
    );
    s.push_str("</svg>\n");
    s
}
