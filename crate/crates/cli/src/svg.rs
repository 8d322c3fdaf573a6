//! Static SVG figures: the body with its inball, circumball, width chord and diameter chord.

use radii_atlas::geometry::{ArcPolygon, Point};
use radii_atlas::radii::RadiiTuple;
use std::fmt::Write;

#[derive(Clone, Debug)]
pub struct Style {
    pub body: String,
    pub inball: String,
    pub circumball: String,
    pub width: String,
    pub diameter: String,
}

impl Default for Style {
    fn default() -> Self {
        Style {
            body: "black".into(),
            inball: "green".into(),
            circumball: "blue".into(),
            width: "orange".into(),
            diameter: "red".into(),
        }
    }
}

fn pt(p: Point) -> String {
    format!("{:.6},{:.6}", p.x, p.y)
}

pub fn render(body: &ArcPolygon, radii: &RadiiTuple, style: &Style) -> Result<String, String> {
    let c = radii.circumcenter;
    let big_r = radii.circumradius;
    let pad = 1.15 * big_r;
    let stroke = big_r / 150.0;

    let outline = body.polyline(0.01);
    let mut path = String::new();
    for (i, p) in outline.iter().enumerate() {
        let _ = write!(path, "{}{} ", if i == 0 { "M" } else { "L" }, pt(*p));
    }
    path.push('Z');

    let n = radii.width_dir;
    let top = body.support(n).map_err(|e| e.to_string())?.point;
    let bottom = top - n.vec() * radii.width;
    let (d0, d1) = radii.diam_pair;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="600" height="600">"#,
        c.x - pad,
        -c.y - pad,
        2.0 * pad,
        2.0 * pad
    );
    let _ = writeln!(
        s,
        "<style>path,circle,line{{fill:none;stroke-width:{stroke}}} .body{{stroke:{}}} .inball{{stroke:{}}} \
         .circumball{{stroke:{}}} .width{{stroke:{}}} .diameter{{stroke:{}}}</style>",
        style.body, style.inball, style.circumball, style.width, style.diameter
    );
    let _ = writeln!(s, r#"<g transform="scale(1,-1)">"#);
    let _ = writeln!(s, r#"<path class="body" d="{path}"/>"#);
    let i = radii.incenter;
    let _ = writeln!(s, r#"<circle class="inball" cx="{}" cy="{}" r="{}"/>"#, i.x, i.y, radii.inradius);
    let _ = writeln!(s, r#"<circle class="circumball" cx="{}" cy="{}" r="{}"/>"#, c.x, c.y, big_r);
    let _ = writeln!(
        s,
        r#"<line class="width" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        top.x, top.y, bottom.x, bottom.y
    );
    let _ = writeln!(s, r#"<line class="diameter" x1="{}" y1="{}" x2="{}" y2="{}"/>"#, d0.x, d0.y, d1.x, d1.y);
    s.push_str("</g>\n</svg>\n");
    Ok(s)
}
