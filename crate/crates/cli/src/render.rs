//! Text renderings of Brauer diagrams.

use std::fmt::Write;

use starcoh::{BrauerArrow, Node, Tag};

const COL: usize = 4;
const MARGIN: usize = 3;

fn col(i: usize) -> usize {
    MARGIN + COL * i
}

fn label(k: usize) -> String {
    let letters = b"abcdefghijklmnopqrstuvwxyz";
    let mut s = String::new();
    let mut k = k;
    loop {
        s.insert(0, letters[k % 26] as char);
        if k < 26 {
            break;
        }
        k = k / 26 - 1;
    }
    s
}

fn put(row: &mut Vec<char>, at: usize, text: &str) {
    if row.len() < at + text.len() {
        row.resize(at + text.len(), ' ');
    }
    for (i, c) in text.chars().enumerate() {
        row[at + i] = c;
    }
}

fn bracket(width: usize, a: usize, b: usize) -> String {
    let mut row = vec![' '; width];
    let (x, y) = (col(a), col(b));
    put(&mut row, x, "+");
    for c in row.iter_mut().take(y).skip(x + 1) {
        *c = '-';
    }
    put(&mut row, y, "+");
    row.into_iter().collect::<String>().trim_end().to_string()
}

/// Two rows of labels, targets above sources; each pair shares a label, caps and cups get brackets.
pub fn ascii(b: &BrauerArrow) -> String {
    let width = col(b.source().max(b.target())) + COL;
    let mut top = vec![' '; width];
    let mut bottom = vec![' '; width];
    put(&mut top, 0, "t");
    put(&mut bottom, 0, "s");
    for (k, (x, y)) in b.pairs().iter().enumerate() {
        let l = label(k);
        for n in [x, y] {
            let row = if n.tag == Tag::Source { &mut bottom } else { &mut top };
            put(row, col(n.index), &l);
        }
    }
    let mut out = String::new();
    let mut caps: Vec<(usize, usize)> = b.caps().collect();
    caps.sort_by_key(|&(i, j)| std::cmp::Reverse(j - i));
    for (i, j) in caps {
        writeln!(out, "{}", bracket(width, i, j)).unwrap();
    }
    writeln!(out, "{}", top.iter().collect::<String>().trim_end()).unwrap();
    writeln!(out, "{}", bottom.iter().collect::<String>().trim_end()).unwrap();
    let mut cups: Vec<(usize, usize)> = b.cups().collect();
    cups.sort_by_key(|&(i, j)| j - i);
    for (i, j) in cups {
        writeln!(out, "{}", bracket(width, i, j)).unwrap();
    }
    out
}

fn node_id(n: &Node) -> String {
    n.to_string()
}

/// Undirected graph with sources and targets on separate ranks.
pub fn dot(b: &BrauerArrow) -> String {
    let mut out = String::from("graph brauer {\n  rankdir=BT;\n  node [shape=point, xlabel=\"\\N\"];\n");
    let row = |tag: Tag, n: usize| {
        let ids: Vec<String> = (0..n).map(|i| node_id(&Node { tag, index: i })).collect();
        let chain = if ids.len() > 1 { format!(" {} [style=invis];", ids.join(" -- ")) } else { String::new() };
        format!("  {{ rank=same; {}{} }}\n", ids.iter().map(|i| format!("{i};")).collect::<Vec<_>>().join(" "), chain)
    };
    if b.source() > 0 {
        out.push_str(&row(Tag::Source, b.source()));
    }
    if b.target() > 0 {
        out.push_str(&row(Tag::Target, b.target()));
    }
    for (x, y) in b.pairs() {
        writeln!(out, "  {} -- {};", node_id(x), node_id(y)).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_past_z() {
        assert_eq!(label(0), "a");
        assert_eq!(label(25), "z");
        assert_eq!(label(26), "aa");
    }

    #[test]
    fn ascii_identity() {
        assert_eq!(ascii(&BrauerArrow::identity(2)), "t  a   b\ns  a   b\n");
    }

    #[test]
    fn ascii_cap() {
        let b = BrauerArrow::from_pairs(0, 2, vec![(Node::t(0), Node::t(1))]).unwrap();
        assert_eq!(ascii(&b), "   +---+\nt  a   a\ns\n");
    }

    #[test]
    fn dot_lists_every_pair() {
        let d = dot(&BrauerArrow::identity(2));
        assert!(d.contains("s0 -- t0;") && d.contains("s1 -- t1;"));
    }
}
