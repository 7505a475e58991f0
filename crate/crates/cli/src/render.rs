//! Text renderings of tree pair diagrams.

use std::fmt::Write;

use thompson_core::{classify, CaretType, Tree, TreePair};

const EMPTY: &str = "(empty tree)";

/// One line per caret in preorder, indented by depth, labelled `n:TYPE`.
fn listing(tree: &Tree) -> Vec<String> {
    fn walk(t: &Tree, depth: usize, offset: usize, types: &[CaretType], out: &mut Vec<String>) {
        let Some((left, right)) = t.children() else {
            return;
        };
        let n = offset + left.caret_count();
        out.push(format!("{}{n}:{}", "  ".repeat(depth), types[n]));
        walk(left, depth + 1, offset, types, out);
        walk(right, depth + 1, n + 1, types, out);
    }
    let types = classify(tree);
    let mut out = Vec::new();
    walk(tree, 0, 0, &types, &mut out);
    out
}

pub fn ascii(w: &TreePair) -> String {
    if w.is_identity() {
        return format!("{EMPTY} : {EMPTY}\n");
    }
    let mut neg = vec!["T-".to_string()];
    neg.extend(listing(w.neg()));
    let mut pos = vec!["T+".to_string()];
    pos.extend(listing(w.pos()));
    let width = neg.iter().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for (i, line) in neg.iter().enumerate() {
        let right = pos.get(i).map(String::as_str).unwrap_or("");
        let sep = if i == 0 { ":" } else { "|" };
        let row = format!("{line:width$}  {sep}  {right}");
        out.push_str(row.trim_end());
        out.push('\n');
    }
    out
}

pub fn dot(w: &TreePair) -> String {
    let mut out = String::from("digraph tree_pair {\n  node [shape=box];\n");
    for (name, label, tree) in [("neg", "T-", w.neg()), ("pos", "T+", w.pos())] {
        let _ = writeln!(out, "  subgraph cluster_{name} {{\n    label=\"{label}\";");
        cluster(&mut out, name, tree);
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}

fn cluster(out: &mut String, prefix: &str, tree: &Tree) {
    // returns the node id for the subtree rooted at `t`
    fn walk(
        t: &Tree,
        offset: usize,
        leaf: &mut usize,
        prefix: &str,
        types: &[CaretType],
        out: &mut String,
    ) -> String {
        match t.children() {
            None => {
                let id = format!("{prefix}_l{leaf}");
                let _ = writeln!(out, "    {id} [shape=point];");
                *leaf += 1;
                id
            }
            Some((left, right)) => {
                let n = offset + left.caret_count();
                let id = format!("{prefix}_c{n}");
                let _ = writeln!(out, "    {id} [label=\"{n}:{}\"];", types[n]);
                let l = walk(left, offset, leaf, prefix, types, out);
                let r = walk(right, n + 1, leaf, prefix, types, out);
                let _ = writeln!(out, "    {id} -> {l};\n    {id} -> {r};");
                id
            }
        }
    }
    let types = classify(tree);
    walk(tree, 0, &mut 0, prefix, &types, out);
}
