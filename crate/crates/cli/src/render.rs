//! Static SVG 1.1 drawings. Output depends only on the input, so identical
//! solutions render to identical bytes.

use std::fmt::Write;

use harmpack::model::occurrences;
use harmpack::{Instance, Packing, Schedule};

const MARGIN: u64 = 20;
const GAP: u64 = 30;
const LABEL_BAND: u64 = 20;

const PALETTE: [&str; 8] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
];

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn header(out: &mut String, width: u64, height: u64) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="10">"#
    );
}

/// One panel per machine: the `w x H` frame, rules at every multiple of the
/// smallest height, one labeled rectangle per job. `y` grows downwards.
pub fn packing_svg(groups: &[(Instance, Packing)]) -> String {
    let (w, hyper) = groups
        .first()
        .map(|(inst, _)| (inst.system().w(), inst.system().hyper()))
        .unwrap_or((1, 1));
    let sx = (480 / w).clamp(4, 40);
    let sy = (480 / hyper).clamp(4, 40);
    let panel_w = w * sx;
    let panel_h = hyper * sy;
    let panels = groups.len().max(1) as u64;
    let width = 2 * MARGIN + panels * panel_w + (panels - 1) * GAP;
    let height = 2 * MARGIN + panel_h + LABEL_BAND;

    let mut out = String::new();
    header(&mut out, width, height);
    for (g, (inst, packing)) in groups.iter().enumerate() {
        let ox = MARGIN + g as u64 * (panel_w + GAP);
        let oy = MARGIN + LABEL_BAND;
        if groups.len() > 1 {
            let _ = writeln!(out, r#"  <text x="{ox}" y="{}">machine {g}</text>"#, MARGIN + 10);
        }
        let _ = writeln!(
            out,
            r#"  <rect class="frame" x="{ox}" y="{oy}" width="{panel_w}" height="{panel_h}" fill="none" stroke="black"/>"#
        );
        if let Some(pitch) = (0..inst.len()).map(|i| inst.height(i)).min() {
            for row in (pitch..hyper).step_by(pitch as usize) {
                let y = oy + row * sy;
                let _ = writeln!(
                    out,
                    r##"  <line class="rule" x1="{ox}" y1="{y}" x2="{}" y2="{y}" stroke="#cccccc" stroke-dasharray="2,2"/>"##,
                    ox + panel_w
                );
            }
        }
        for (i, job) in inst.jobs().iter().enumerate() {
            let Some(pos) = packing.get(&job.id) else { continue };
            let (x, y) = (ox + pos.x * sx, oy + pos.y * sy);
            let (rw, rh) = (job.p * sx, inst.height(i) * sy);
            let id = escape(&job.id.0);
            let _ = writeln!(
                out,
                r#"  <rect class="job" data-id="{id}" x="{x}" y="{y}" width="{rw}" height="{rh}" fill="{}" fill-opacity="0.7" stroke="black"/>"#,
                PALETTE[i % PALETTE.len()]
            );
            let _ = writeln!(
                out,
                r#"  <text class="label" x="{}" y="{}">{id}</text>"#,
                x + 2,
                y + rh.min(12)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

/// One Gantt lane per machine over `[0, w H)` with a tick at every window
/// boundary. Each job is labeled once, on its first occurrence.
pub fn schedule_svg(groups: &[(Instance, Schedule)]) -> String {
    let (w, span) = groups
        .first()
        .map(|(inst, _)| (inst.system().w(), inst.system().hyperperiod()))
        .unwrap_or((1, 1));
    let sx = (960 / span).clamp(1, 40);
    let lane_h = 40;
    let lanes = groups.len().max(1) as u64;
    let width = 2 * MARGIN + span * sx;
    let height = 2 * MARGIN + lanes * (lane_h + LABEL_BAND);

    let mut out = String::new();
    header(&mut out, width, height);
    for (g, (inst, schedule)) in groups.iter().enumerate() {
        let oy = MARGIN + LABEL_BAND + g as u64 * (lane_h + LABEL_BAND);
        let _ = writeln!(
            out,
            r#"  <rect class="frame" x="{MARGIN}" y="{oy}" width="{}" height="{lane_h}" fill="none" stroke="black"/>"#,
            span * sx
        );
        for t in (w..span).step_by(w as usize) {
            let x = MARGIN + t * sx;
            let _ = writeln!(
                out,
                r##"  <line class="window" x1="{x}" y1="{oy}" x2="{x}" y2="{}" stroke="#cccccc"/>"##,
                oy + lane_h
            );
        }
        for (i, job) in inst.jobs().iter().enumerate() {
            let Some(start) = schedule.get(&job.id) else { continue };
            let id = escape(&job.id.0);
            for (k, (begin, end)) in occurrences(inst, i, start).into_iter().enumerate() {
                let x = MARGIN + begin * sx;
                let _ = writeln!(
                    out,
                    r#"  <rect class="job" data-id="{id}" x="{x}" y="{oy}" width="{}" height="{lane_h}" fill="{}" fill-opacity="0.7" stroke="black"><title>{id} #{k}</title></rect>"#,
                    (end - begin) * sx,
                    PALETTE[i % PALETTE.len()]
                );
                if k == 0 {
                    let _ = writeln!(out, r#"  <text class="label" x="{x}" y="{}">{id}</text>"#, oy - 4);
                }
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
