//! Plot of the cohomology regions of `O(x1, x2)` on F.

use std::fmt::Write as _;

use crate::cohomology::{figure1_region, Region};

pub const MAX_BOUND: i64 = 100;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FigureError {
    #[error("bounds must satisfy -{max} <= min <= max <= {max}, got [{lo}, {hi}]", max = MAX_BOUND)]
    Bounds { lo: i64, hi: i64 },
}

/// Square window `[lo, hi]^2` of lattice points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    lo: i64,
    hi: i64,
}

impl Bounds {
    pub fn new(lo: i64, hi: i64) -> Result<Self, FigureError> {
        if lo > hi || lo < -MAX_BOUND || hi > MAX_BOUND {
            return Err(FigureError::Bounds { lo, hi });
        }
        Ok(Bounds { lo, hi })
    }

    pub fn lo(self) -> i64 {
        self.lo
    }

    pub fn hi(self) -> i64 {
        self.hi
    }
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { lo: -9, hi: 9 }
    }
}

pub fn color(r: Region) -> &'static str {
    match r {
        Region::H0 => "#4e79a7",
        Region::H1Upper => "#f28e2b",
        Region::H2Upper => "#e15759",
        Region::H2Lower => "#b07aa1",
        Region::H1Lower => "#edc948",
        Region::H3 => "#59a14f",
        Region::Zero => "#e8e8e8",
    }
}

fn glyph(r: Region) -> char {
    match r {
        Region::H0 => '0',
        Region::H1Upper => '1',
        Region::H2Upper => '2',
        Region::H2Lower => 'b',
        Region::H1Lower => 'a',
        Region::H3 => '3',
        Region::Zero => '.',
    }
}

/// A boundary line `c1*x1 + c2*x2 + c0 = 0` and its caption.
pub struct Boundary {
    pub coeffs: (i64, i64, i64),
    pub caption: &'static str,
}

pub const BOUNDARIES: [Boundary; 4] = [
    Boundary {
        coeffs: (1, 1, 1),
        caption: "x1+x2+1=0",
    },
    Boundary {
        coeffs: (1, 0, 2),
        caption: "x1=-2",
    },
    Boundary {
        coeffs: (1, 1, 3),
        caption: "x1+x2+3=0",
    },
    Boundary {
        coeffs: (0, 1, 2),
        caption: "x2=-2",
    },
];

pub fn ascii(b: Bounds) -> String {
    let mut out = String::new();
    let width = b.hi.abs().max(b.lo.abs()).to_string().len() + 1;
    for x2 in (b.lo..=b.hi).rev() {
        write!(out, "{x2:>width$} ").unwrap();
        let row: String = (b.lo..=b.hi).map(|x1| glyph(figure1_region(x1, x2))).collect();
        out.push_str(&row);
        out.push('\n');
    }
    writeln!(out, "{:>width$} x1 from {} to {}, x2 upwards", "", b.lo, b.hi).unwrap();
    out.push('\n');
    for r in Region::ALL {
        writeln!(out, "{}  {:<8} {}", glyph(r), r.label(), r.caption()).unwrap();
    }
    let captions: Vec<_> = BOUNDARIES.iter().map(|l| l.caption).collect();
    writeln!(out, "boundaries: {}", captions.join(", ")).unwrap();
    out
}

/// Endpoints of `line` clipped to the box `[lo, hi]^2`, in lattice units.
fn clip(line: &Boundary, lo: f64, hi: f64) -> Option<((f64, f64), (f64, f64))> {
    let (a, b, c) = (line.coeffs.0 as f64, line.coeffs.1 as f64, line.coeffs.2 as f64);
    let mut pts: Vec<(f64, f64)> = Vec::new();
    for x in [lo, hi] {
        if b != 0.0 {
            let y = -(a * x + c) / b;
            if (lo..=hi).contains(&y) {
                pts.push((x, y));
            }
        }
        if a != 0.0 {
            let y = x;
            let x1 = -(b * y + c) / a;
            if (lo..=hi).contains(&x1) {
                pts.push((x1, y));
            }
        }
    }
    pts.sort_by(|p, q| p.partial_cmp(q).expect("finite"));
    pts.dedup();
    (pts.len() >= 2).then(|| (pts[0], pts[pts.len() - 1]))
}

pub fn svg(b: Bounds) -> String {
    const CELL: i64 = 24;
    const MARGIN: i64 = 40;
    const LEGEND: i64 = 190;
    let n = b.hi - b.lo + 1;
    let plot = n * CELL;
    let (w, h) = (plot + 2 * MARGIN + LEGEND, plot + 2 * MARGIN);
    // lattice point (x1, x2) sits at the centre of its cell
    let px = |x1: f64| MARGIN as f64 + (x1 - b.lo as f64 + 0.5) * CELL as f64;
    let py = |x2: f64| MARGIN as f64 + (b.hi as f64 - x2 + 0.5) * CELL as f64;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="11">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#).unwrap();
    for x2 in (b.lo..=b.hi).rev() {
        for x1 in b.lo..=b.hi {
            let r = figure1_region(x1, x2);
            writeln!(
                s,
                r#"<rect x="{}" y="{}" width="{CELL}" height="{CELL}" fill="{}" data-x1="{x1}" data-x2="{x2}" data-region="{}"/>"#,
                px(x1 as f64) - CELL as f64 / 2.0,
                py(x2 as f64) - CELL as f64 / 2.0,
                color(r),
                r.label()
            )
            .unwrap();
        }
    }
    if (b.lo..=b.hi).contains(&0) {
        writeln!(
            s,
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#555" stroke-width="1"/>"##,
            px(b.lo as f64 - 0.5),
            py(0.0),
            px(b.hi as f64 + 0.5),
            py(0.0)
        )
        .unwrap();
        writeln!(
            s,
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#555" stroke-width="1"/>"##,
            px(0.0),
            py(b.lo as f64 - 0.5),
            px(0.0),
            py(b.hi as f64 + 0.5)
        )
        .unwrap();
    }
    let (lo, hi) = (b.lo as f64 - 0.5, b.hi as f64 + 0.5);
    for line in &BOUNDARIES {
        if let Some(((xa, ya), (xb, yb))) = clip(line, lo, hi) {
            writeln!(
                s,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="2"/>"#,
                px(xa),
                py(ya),
                px(xb),
                py(yb)
            )
            .unwrap();
            let (tx, ty) = if ya >= yb { (xa, ya) } else { (xb, yb) };
            writeln!(
                s,
                r#"<text x="{}" y="{}">{}</text>"#,
                px(tx) + 4.0,
                py(ty) - 4.0,
                line.caption
            )
            .unwrap();
        }
    }
    let lx = plot + 2 * MARGIN;
    for (i, r) in Region::ALL.into_iter().enumerate() {
        let y = MARGIN + 22 * i as i64;
        writeln!(
            s,
            r#"<rect x="{lx}" y="{y}" width="14" height="14" fill="{}"/>"#,
            color(r)
        )
        .unwrap();
        writeln!(
            s,
            r#"<text x="{}" y="{}">{}: {}</text>"#,
            lx + 20,
            y + 11,
            r.label(),
            r.caption()
        )
        .unwrap();
    }
    writeln!(s, r#"<text x="{}" y="{}">x1</text>"#, MARGIN + plot / 2, h - 10).unwrap();
    writeln!(s, r#"<text x="10" y="{}">x2</text>"#, MARGIN + plot / 2).unwrap();
    s.push_str("</svg>\n");
    s
}
