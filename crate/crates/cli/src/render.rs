//! Braid diagrams drawn with time running down the page. The first
//! generator of the word is the top band. Strands are numbered left to
//! right; in `σ_i` the strand coming from position `i+1` passes over.

use std::fmt::Write;

use stockbraid_core::BraidWord;

const GAP: usize = 2;

fn strand_row(n: usize) -> Vec<char> {
    let mut row = vec![' '; GAP * (n - 1) + 1];
    for p in 0..n {
        row[GAP * p] = '|';
    }
    row
}

fn push_row(out: &mut String, row: &[char]) {
    let line: String = row.iter().collect();
    out.push_str(line.trim_end());
    out.push('\n');
}

pub fn ascii(word: &BraidWord) -> String {
    let n = word.n_strands() as usize;
    let mut out = format!("{word}\n");
    push_row(&mut out, &strand_row(n));
    for g in word.generators() {
        let c = GAP * (g.index() as usize - 1);
        let mut top = strand_row(n);
        top[c] = '\\';
        top[c + GAP] = '/';
        let mut mid = strand_row(n);
        mid[c] = ' ';
        mid[c + GAP] = ' ';
        mid[c + 1] = if g.is_positive() { '/' } else { '\\' };
        let mut bottom = strand_row(n);
        bottom[c] = '/';
        bottom[c + GAP] = '\\';
        push_row(&mut out, &top);
        push_row(&mut out, &mid);
        push_row(&mut out, &bottom);
    }
    push_row(&mut out, &strand_row(n));
    out
}

const DX: i64 = 40;
const DY: i64 = 60;
const MARGIN: i64 = 20;

fn line(out: &mut String, x1: i64, y1: i64, x2: i64, y2: i64) {
    writeln!(out, r#"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#).expect("write to string");
}

pub fn svg(word: &BraidWord) -> String {
    let n = word.n_strands() as i64;
    let bands = word.len().max(1) as i64;
    let width = 2 * MARGIN + DX * (n - 1);
    let height = 2 * MARGIN + DY * bands;
    let x = |p: i64| MARGIN + DX * p;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .expect("write to string");
    writeln!(out, "  <title>{word}</title>").expect("write to string");
    out.push_str(r#"  <g stroke="black" stroke-width="3" stroke-linecap="round" fill="none">"#);
    out.push('\n');

    if word.is_empty() {
        for p in 0..n {
            line(&mut out, x(p), MARGIN, x(p), MARGIN + DY);
        }
    }
    for (k, g) in word.generators().iter().enumerate() {
        let y0 = MARGIN + DY * k as i64;
        let y1 = y0 + DY;
        let i = i64::from(g.index()) - 1;
        for p in (0..n).filter(|&p| p != i && p != i + 1) {
            line(&mut out, x(p), y0, x(p), y1);
        }
        // over strand unbroken, under strand split around the middle
        let (over, under) = if g.is_positive() { ((i + 1, i), (i, i + 1)) } else { ((i, i + 1), (i + 1, i)) };
        line(&mut out, x(over.0), y0, x(over.1), y1);
        let (ux0, ux1) = (x(under.0), x(under.1));
        let cut = |f: i64| (ux0 + (ux1 - ux0) * f / 10, y0 + DY * f / 10);
        let (ax, ay) = cut(4);
        let (bx, by) = cut(6);
        line(&mut out, ux0, y0, ax, ay);
        line(&mut out, bx, by, ux1, y1);
    }
    out.push_str("  </g>\n</svg>\n");
    out
}
