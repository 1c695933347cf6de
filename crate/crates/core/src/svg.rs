//! Static SVG rendering of domain profiles on the moment-map plane, with an
//! optional capacity staircase. Output is byte-deterministic: the only floats
//! are coordinates, printed with 15 significant digits.

use std::fmt::Write;

use crate::domain::ConvexToricDomain;
use crate::rational::{to_f64, Rational};

const PANEL: f64 = 400.0;
const MARGIN: f64 = 50.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

/// Shortest decimal with at most 15 significant digits.
pub fn fmt_num(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".to_string();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (14 - magnitude).clamp(0, 15) as usize;
    let s = format!("{v:.decimals$}");
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

struct Frame {
    x0: f64,
    x_max: f64,
    y_max: f64,
}

impl Frame {
    fn x(&self, v: f64) -> String {
        fmt_num(self.x0 + MARGIN + v / self.x_max * PANEL)
    }

    fn y(&self, v: f64) -> String {
        fmt_num(MARGIN + PANEL - v / self.y_max * PANEL)
    }

    fn axes(&self, out: &mut String, x_label: &str, y_label: &str) {
        let (ox, oy) = (self.x(0.0), self.y(0.0));
        let _ = writeln!(
            out,
            r#"<line x1="{ox}" y1="{oy}" x2="{}" y2="{oy}" stroke="black"/>"#,
            self.x(self.x_max)
        );
        let _ = writeln!(
            out,
            r#"<line x1="{ox}" y1="{oy}" x2="{ox}" y2="{}" stroke="black"/>"#,
            self.y(self.y_max)
        );
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
            fmt_num(self.x0 + MARGIN + PANEL / 2.0),
            fmt_num(MARGIN + PANEL + 35.0),
            escape(x_label)
        );
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle" transform="rotate(-90 {} {})">{}</text>"#,
            fmt_num(self.x0 + 15.0),
            fmt_num(MARGIN + PANEL / 2.0),
            fmt_num(self.x0 + 15.0),
            fmt_num(MARGIN + PANEL / 2.0),
            escape(y_label)
        );
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#,
            self.x(self.x_max),
            fmt_num(MARGIN + PANEL + 18.0),
            fmt_num(self.x_max)
        );
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#,
            fmt_num(self.x0 + MARGIN - 6.0),
            fmt_num(MARGIN + 4.0),
            fmt_num(self.y_max)
        );
    }
}

fn polyline(out: &mut String, frame: &Frame, pts: &[(f64, f64)], color: &str) {
    let coords: Vec<String> = pts.iter().map(|&(x, y)| format!("{},{}", frame.x(x), frame.y(y))).collect();
    let _ = writeln!(out, r#"<polyline fill="none" stroke="{color}" stroke-width="2" points="{}"/>"#, coords.join(" "));
}

/// Profiles of `domains` and, when given, the staircases `k ↦ c_k` (one
/// sequence per domain, same order).
pub fn render(domains: &[ConvexToricDomain], staircases: Option<&[Vec<Rational>]>) -> String {
    let panels = if staircases.is_some() { 2.0 } else { 1.0 };
    let width = panels * (PANEL + 2.0 * MARGIN);
    let height = PANEL + 2.0 * MARGIN + 20.0 * domains.len() as f64 + 10.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}" font-family="sans-serif" font-size="12">"#,
        fmt_num(width),
        fmt_num(height),
        fmt_num(width),
        fmt_num(height)
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let extent = domains
        .iter()
        .flat_map(|d| [to_f64(d.a()), to_f64(d.f0())])
        .fold(0.0_f64, f64::max)
        .max(1e-12)
        * 1.05;
    let frame = Frame { x0: 0.0, x_max: extent, y_max: extent };
    frame.axes(&mut out, "π|z₁|²", "π|z₂|²");
    for (i, d) in domains.iter().enumerate() {
        let mut pts = vec![(0.0, 0.0)];
        pts.extend(d.profile().breakpoints().iter().map(|(x, y)| (to_f64(x), to_f64(y))));
        pts.push((to_f64(d.a()), 0.0));
        polyline(&mut out, &frame, &pts, COLORS[i % COLORS.len()]);
    }

    if let Some(stairs) = staircases {
        let k_max = stairs.iter().map(|s| s.len().saturating_sub(1)).max().unwrap_or(0).max(1) as f64;
        let c_max = stairs
            .iter()
            .flat_map(|s| s.iter().map(to_f64))
            .fold(0.0_f64, f64::max)
            .max(1e-12)
            * 1.05;
        let frame = Frame { x0: PANEL + 2.0 * MARGIN, x_max: k_max + 1.0, y_max: c_max };
        frame.axes(&mut out, "k", "c_k");
        for (i, s) in stairs.iter().enumerate() {
            let mut pts = Vec::new();
            for (k, c) in s.iter().enumerate() {
                let c = to_f64(c);
                pts.push((k as f64, c));
                pts.push((k as f64 + 1.0, c));
            }
            polyline(&mut out, &frame, &pts, COLORS[i % COLORS.len()]);
        }
    }

    for (i, d) in domains.iter().enumerate() {
        let y = MARGIN + PANEL + 50.0 + 20.0 * i as f64;
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" fill="{}">{}</text>"#,
            fmt_num(MARGIN),
            fmt_num(y),
            COLORS[i % COLORS.len()],
            escape(&d.to_string())
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{make_ball, make_ellipsoid};
    use crate::rational::int;

    #[test]
    fn number_format() {
        assert_eq!(fmt_num(0.0), "0");
        assert_eq!(fmt_num(450.0), "450");
        assert_eq!(fmt_num(1.0 / 3.0), "0.333333333333333");
        assert_eq!(fmt_num(-2.5), "-2.5");
        assert_eq!(fmt_num(123456.789), "123456.789");
    }

    #[test]
    fn two_profiles_and_a_staircase() {
        let a = make_ellipsoid(int(1), int(2)).unwrap();
        let b = make_ball(int(3)).unwrap();
        let plain = render(&[a.clone(), b.clone()], None);
        assert_eq!(plain.matches("<polyline").count(), 2);
        assert!(plain.contains("π|z₁|²"));
        let stairs = vec![vec![int(0), int(1), int(2)]];
        let both = render(&[a], Some(&stairs));
        assert_eq!(both.matches("<polyline").count(), 2);
        assert!(both.contains(">c_k<"));
        assert_eq!(both, render(&[make_ellipsoid(int(1), int(2)).unwrap()], Some(&stairs)));
    }
}
