//! Deterministic SVG rendering of the nested-interval picture.
//!
//! The drawing is an upper half-plane view: the real line is the bottom
//! edge and every interval becomes a semicircular geodesic over its
//! endpoints. The first `terms` intervals cut by the symbol stream are
//! drawn over a light Farey tessellation (denominators up to 6), one color
//! per symbol; an endpoint at infinity becomes a vertical ray, and an
//! interval that wraps around through infinity is shown as a ray at each of
//! its two finite endpoints. A dashed vertical line marks the number.
//!
//! All coordinates are emitted with two decimals, so equal inputs render
//! byte-identical files.

use num::rational::Ratio;
use num::{BigRational, ToPrimitive};
use parity_cf::delta::cylinder;
use parity_cf::{DeltaStream, ExtRational, ParityClass, Result};

const WIDTH: f64 = 880.0;
const HEIGHT: f64 = 440.0;
const PLOT_LEFT: f64 = 30.0;
const PLOT_RIGHT: f64 = 850.0;
const BASELINE: f64 = 396.0;
const RAY_TOP: f64 = 24.0;

fn color(s: ParityClass) -> &'static str {
    match s {
        ParityClass::Zero => "#3366cc",
        ParityClass::One => "#cc3333",
        ParityClass::Inf => "#22aa66",
    }
}

fn ratio_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("plot coordinates fit in f64")
}

/// Farey-neighbor pairs (a/b, c/d) in the unit interval with b, d ≤ 6,
/// sorted; translating them along the integers tiles the background.
fn farey_pairs() -> Vec<(Ratio<i64>, Ratio<i64>)> {
    let mut fractions = Vec::new();
    for b in 1..=6i64 {
        for a in 0..=b {
            let f = Ratio::new(a, b);
            if !fractions.contains(&f) {
                fractions.push(f);
            }
        }
    }
    fractions.sort();
    let mut pairs = Vec::new();
    for (i, f) in fractions.iter().enumerate() {
        for g in &fractions[i + 1..] {
            if (g.numer() * f.denom() - f.numer() * g.denom()) == 1 {
                pairs.push((*f, *g));
            }
        }
    }
    pairs.sort();
    pairs
}

struct Canvas {
    xmin: f64,
    scale: f64,
    out: String,
}

impl Canvas {
    fn px(&self, t: f64) -> f64 {
        PLOT_LEFT + (t - self.xmin) * self.scale
    }

    fn line(&mut self, x1: f64, y1: f64, x2: f64, y2: f64, style: &str) {
        self.out.push_str(&format!(
            "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" {style}/>\n"
        ));
    }

    fn arc(&mut self, t1: f64, t2: f64, style: &str, title: Option<&str>) {
        let (x1, x2) = (self.px(t1), self.px(t2));
        let r = (x2 - x1) / 2.0;
        let d = format!("M {x1:.2} {BASELINE:.2} A {r:.2} {r:.2} 0 0 1 {x2:.2} {BASELINE:.2}");
        match title {
            Some(text) => self.out.push_str(&format!(
                "  <path d=\"{d}\" {style}><title>{text}</title></path>\n"
            )),
            None => self.out.push_str(&format!("  <path d=\"{d}\" {style}/>\n")),
        }
    }

    fn ray(&mut self, t: f64, style: &str) {
        let x = self.px(t);
        self.line(x, BASELINE, x, RAY_TOP, style);
    }

    fn text(&mut self, x: f64, y: f64, anchor: &str, content: &str) {
        self.out.push_str(&format!(
            "  <text x=\"{x:.2}\" y=\"{y:.2}\" font-family=\"monospace\" font-size=\"11\" \
             text-anchor=\"{anchor}\" fill=\"#333\">{content}</text>\n"
        ));
    }
}

/// Render the first `terms` nested intervals of `stream` around the number
/// at `x_pos` (labelled `x_label`).
pub fn render(
    x_pos: &BigRational,
    x_label: &str,
    stream: &mut DeltaStream,
    terms: usize,
) -> Result<String> {
    let mut intervals: Vec<(usize, ParityClass, ExtRational, ExtRational)> = Vec::new();
    for m in 1..=terms {
        let alpha = stream.symbol(m)?;
        let (lo, hi) = cylinder(stream, m)?;
        intervals.push((m, alpha, lo, hi));
    }

    // Fit the view to the finite endpoints and the number itself.
    let x_f = ratio_f64(x_pos);
    let mut lo_f = x_f;
    let mut hi_f = x_f;
    for (_, _, lo, hi) in &intervals {
        for e in [lo, hi] {
            if let Some(v) = e.finite() {
                let t = ratio_f64(v);
                lo_f = lo_f.min(t);
                hi_f = hi_f.max(t);
            }
        }
    }
    let pad = ((hi_f - lo_f) * 0.08).max(0.05);
    let xmin = lo_f - pad;
    let xmax = hi_f + pad;
    let scale = (PLOT_RIGHT - PLOT_LEFT) / (xmax - xmin);

    let mut canvas = Canvas {
        xmin,
        scale,
        out: String::new(),
    };
    canvas.out.push_str(&format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" \
         width=\"{WIDTH:.0}\" height=\"{HEIGHT:.0}\" viewBox=\"0 0 {WIDTH:.0} {HEIGHT:.0}\">\n"
    ));
    canvas
        .out
        .push_str("  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n");

    // Real line with integer ticks.
    canvas.line(
        PLOT_LEFT,
        BASELINE,
        PLOT_RIGHT,
        BASELINE,
        "stroke=\"#222222\" stroke-width=\"1\"",
    );
    let mut n = xmin.ceil() as i64;
    while (n as f64) <= xmax {
        let x = canvas.px(n as f64);
        canvas.line(
            x,
            BASELINE,
            x,
            BASELINE + 6.0,
            "stroke=\"#222222\" stroke-width=\"1\"",
        );
        canvas.text(x, BASELINE + 20.0, "middle", &n.to_string());
        n += 1;
    }

    // Farey tessellation background.
    let pairs = farey_pairs();
    let mut cell = xmin.floor() as i64;
    while (cell as f64) < xmax {
        for (f, g) in &pairs {
            let t1 = cell as f64 + *f.numer() as f64 / *f.denom() as f64;
            let t2 = cell as f64 + *g.numer() as f64 / *g.denom() as f64;
            if t2 < xmin || t1 > xmax {
                continue;
            }
            canvas.arc(
                t1,
                t2,
                "fill=\"none\" stroke=\"#cccccc\" stroke-width=\"0.6\"",
                None,
            );
        }
        cell += 1;
    }

    // Nested intervals, shallow depths first so deep ones draw on top.
    for (m, alpha, lo, hi) in &intervals {
        let width = (2.8 - 0.12 * (*m as f64)).max(1.0);
        let style = format!(
            "fill=\"none\" stroke=\"{}\" stroke-width=\"{width:.2}\" stroke-opacity=\"0.85\"",
            color(*alpha)
        );
        let title = format!("depth {m}: symbol {alpha}, interval [{lo}, {hi}]");
        match (lo.finite(), hi.finite()) {
            (Some(a), Some(b)) => {
                let (ta, tb) = (ratio_f64(a), ratio_f64(b));
                if a <= x_pos && x_pos <= b {
                    canvas.arc(ta, tb, &style, Some(&title));
                } else {
                    // The interval wraps through infinity: show a ray at
                    // each finite endpoint instead of the chord.
                    canvas.ray(ta, &style);
                    canvas.ray(tb, &style);
                }
            }
            (Some(a), None) | (None, Some(a)) => canvas.ray(ratio_f64(a), &style),
            (None, None) => unreachable!("an interval has at most one endpoint at infinity"),
        }
    }

    // The number itself.
    let x_px = canvas.px(x_f);
    canvas.line(
        x_px,
        BASELINE,
        x_px,
        20.0,
        "stroke=\"#111111\" stroke-width=\"1\" stroke-dasharray=\"4,3\"",
    );
    canvas.text(x_px, 14.0, "middle", &format!("x = {x_label}"));

    // Legend.
    for (i, s) in [ParityClass::Zero, ParityClass::One, ParityClass::Inf]
        .iter()
        .enumerate()
    {
        let y = 30.0 + 16.0 * i as f64;
        canvas.out.push_str(&format!(
            "  <rect x=\"36.00\" y=\"{:.2}\" width=\"10\" height=\"10\" fill=\"{}\"/>\n",
            y - 9.0,
            color(*s)
        ));
        canvas.text(52.0, y, "start", &format!("symbol {s}"));
    }

    // The letter sequence itself, matching the symbol table for this input.
    let letters: Vec<String> = intervals.iter().map(|(_, s, _, _)| s.to_string()).collect();
    canvas.text(
        PLOT_LEFT,
        BASELINE + 36.0,
        "start",
        &format!("symbols: {}", letters.join(",")),
    );

    canvas.out.push_str("</svg>\n");
    Ok(canvas.out)
}
