//! SVG drawings of Farey-graph pieces on the absolute.
//!
//! Exact labels are only converted to floats here. Coordinates are printed
//! with six decimals so the output is byte-stable.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::arith::ExtRational;
use crate::contfrac::{bamboo_triangulation, PositiveCF};
use crate::error::{Error, Result};
use crate::modular::stern_brocot_sequence;
use crate::triangulation::{farey_labels, Triangulation};

pub const MAX_DEPTH: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    /// The absolute squeezed onto `[0, 1]` by `z -> z/(z+1)`; geodesics are
    /// semicircles above it.
    HalfPlane,
    /// The absolute as the unit circle via `z -> i(z-i)/(z+i)`; geodesics
    /// are arcs orthogonal to it.
    Disk,
}

impl FromStr for Model {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "halfplane" | "half-plane" => Ok(Model::HalfPlane),
            "disk" => Ok(Model::Disk),
            _ => Err(Error::InvalidConfig(format!("unknown model {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderConfig {
    pub width: u32,
    pub height: u32,
    pub model: Model,
    pub stroke: f64,
    pub depth: u32,
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig {
            width: 800,
            height: 450,
            model: Model::HalfPlane,
            stroke: 1.0,
            depth: 3,
        }
    }
}

impl RenderConfig {
    pub fn validate(&self) -> Result<()> {
        if self.width == 0 || self.height == 0 {
            return Err(Error::InvalidConfig("width and height must be positive".into()));
        }
        if !(self.stroke.is_finite() && self.stroke > 0.0) {
            return Err(Error::InvalidConfig("stroke must be a positive number".into()));
        }
        if self.depth > MAX_DEPTH {
            return Err(Error::DepthLimit(self.depth, MAX_DEPTH));
        }
        Ok(())
    }
}

pub enum RenderTarget<'a> {
    /// Stern–Brocot sequence `depth` with every edge created on the way.
    Farey,
    /// Farey labels with `1/0` at vertex 1 and `0/1` at vertex `n`.
    Triangulation(&'a Triangulation),
    Bamboo(&'a PositiveCF),
}

/// A labelled point set with edges given by index pairs.
struct Picture {
    points: Vec<ExtRational>,
    edges: Vec<(usize, usize)>,
}

fn farey_picture(depth: u32) -> Picture {
    let points = stern_brocot_sequence(depth);
    let index = |x: &ExtRational| points.binary_search(x).expect("earlier sequences are subsequences");
    let mut edges = vec![(0, points.len() - 1)];
    for k in 0..=depth {
        let seq = stern_brocot_sequence(k);
        for w in seq.windows(2) {
            edges.push((index(&w[0]), index(&w[1])));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Picture { points, edges }
}

fn triangulation_picture(t: &Triangulation) -> Result<Picture> {
    let n = t.n();
    let points = farey_labels(t, (1, n))?;
    let mut edges: Vec<(usize, usize)> = (1..=n).map(|i| (i - 1, i % n)).collect();
    edges.extend(t.diagonals().into_iter().map(|(a, b)| (a - 1, b - 1)));
    for e in edges.iter_mut() {
        *e = (e.0.min(e.1), e.0.max(e.1));
    }
    edges.sort_unstable();
    Ok(Picture { points, edges })
}

fn fmt6(x: f64) -> String {
    // avoid "-0.000000"
    let s = format!("{x:.6}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000000".into()
    } else {
        s
    }
}

struct Canvas {
    cfg: RenderConfig,
    margin: f64,
}

impl Canvas {
    fn point(&self, x: &ExtRational) -> (f64, f64) {
        let (w, h) = (self.cfg.width as f64, self.cfg.height as f64);
        match self.cfg.model {
            Model::HalfPlane => {
                // p/q -> p/(p+q), so 1/0 -> 1
                let t = crate::arith::ratio_to_f64(x.num(), &(x.num() + x.den()));
                (self.margin + t * (w - 2.0 * self.margin), h - self.margin)
            }
            Model::Disk => {
                let (p, q) = (x.num(), x.den());
                let norm = p * p + q * q;
                let u = crate::arith::ratio_to_f64(&(p * q * 2), &norm);
                let v = crate::arith::ratio_to_f64(&(p * p - q * q), &norm);
                let r = self.radius();
                (w / 2.0 + r * u, h / 2.0 - r * v)
            }
        }
    }

    fn radius(&self) -> f64 {
        (self.cfg.width.min(self.cfg.height) as f64) / 2.0 - self.margin
    }

    fn arc(&self, a: (f64, f64), b: (f64, f64)) -> String {
        let (a, b) = if a.0 <= b.0 { (a, b) } else { (b, a) };
        match self.cfg.model {
            Model::HalfPlane => {
                let r = (b.0 - a.0) / 2.0;
                format!(
                    "M {} {} A {} {} 0 0 1 {} {}",
                    fmt6(a.0),
                    fmt6(a.1),
                    fmt6(r),
                    fmt6(r),
                    fmt6(b.0),
                    fmt6(b.1)
                )
            }
            Model::Disk => {
                let (cx, cy, big_r) = (
                    self.cfg.width as f64 / 2.0,
                    self.cfg.height as f64 / 2.0,
                    self.radius(),
                );
                let ua = ((a.0 - cx) / big_r, (a.1 - cy) / big_r);
                let ub = ((b.0 - cx) / big_r, (b.1 - cy) / big_r);
                let dot = ua.0 * ub.0 + ua.1 * ub.1;
                let half = dot.clamp(-1.0, 1.0).acos() / 2.0;
                if (std::f64::consts::FRAC_PI_2 - half).abs() < 1e-9 {
                    return format!("M {} {} L {} {}", fmt6(a.0), fmt6(a.1), fmt6(b.0), fmt6(b.1));
                }
                // centre on the bisector at distance sec(half), radius tan(half)
                let mid = (ua.0 + ub.0, ua.1 + ub.1);
                let len = (mid.0 * mid.0 + mid.1 * mid.1).sqrt();
                let dist = 1.0 / half.cos();
                let centre = (cx + big_r * dist * mid.0 / len, cy + big_r * dist * mid.1 / len);
                let r = big_r * half.tan();
                let d = (b.0 - a.0, b.1 - a.1);
                let right = (-d.1, d.0);
                let sweep = if (centre.0 - a.0) * right.0 + (centre.1 - a.1) * right.1 > 0.0 { 1 } else { 0 };
                format!(
                    "M {} {} A {} {} 0 0 {} {} {}",
                    fmt6(a.0),
                    fmt6(a.1),
                    fmt6(r),
                    fmt6(r),
                    sweep,
                    fmt6(b.0),
                    fmt6(b.1)
                )
            }
        }
    }
}

pub fn render_svg(target: &RenderTarget<'_>, cfg: &RenderConfig) -> Result<String> {
    cfg.validate()?;
    let picture = match target {
        RenderTarget::Farey => farey_picture(cfg.depth),
        RenderTarget::Triangulation(t) => triangulation_picture(t)?,
        RenderTarget::Bamboo(cf) => triangulation_picture(&bamboo_triangulation(cf)?.triangulation)?,
    };
    let canvas = Canvas {
        cfg: cfg.clone(),
        margin: 24.0,
    };
    let coords: Vec<(f64, f64)> = picture.points.iter().map(|x| canvas.point(x)).collect();
    let mut out = String::new();
    let (w, h) = (cfg.width, cfg.height);
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(out, "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>");
    match cfg.model {
        Model::HalfPlane => {
            let y = fmt6(h as f64 - canvas.margin);
            let _ = writeln!(
                out,
                "<line class=\"absolute\" x1=\"0.000000\" y1=\"{y}\" x2=\"{}\" y2=\"{y}\" stroke=\"gray\"/>",
                fmt6(w as f64)
            );
        }
        Model::Disk => {
            let _ = writeln!(
                out,
                "<circle class=\"absolute\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"gray\"/>",
                fmt6(w as f64 / 2.0),
                fmt6(h as f64 / 2.0),
                fmt6(canvas.radius())
            );
        }
    }
    let _ = writeln!(out, "<g fill=\"none\" stroke=\"black\" stroke-width=\"{}\">", fmt6(cfg.stroke));
    for &(i, j) in &picture.edges {
        let _ = writeln!(out, "<path class=\"edge\" d=\"{}\"/>", canvas.arc(coords[i], coords[j]));
    }
    out.push_str("</g>\n<g font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">\n");
    for (x, (px, py)) in picture.points.iter().zip(&coords) {
        let _ = writeln!(
            out,
            "<circle class=\"vertex\" cx=\"{}\" cy=\"{}\" r=\"2.000000\"/><text x=\"{}\" y=\"{}\">{}</text>",
            fmt6(*px),
            fmt6(*py),
            fmt6(*px),
            fmt6(py + 14.0),
            x
        );
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
