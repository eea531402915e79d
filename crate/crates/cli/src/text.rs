//! Plain-text tables.

use rootsys::Edge;
use tensor::CheckReport;

/// Left-aligned columns separated by two spaces.
pub fn table(head: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = head.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(head.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

pub fn checks_table(checks: &[CheckReport]) -> String {
    let rows: Vec<Vec<String>> = checks
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                if c.passed() { "pass" } else { "FAIL" }.into(),
                c.checked.to_string(),
                c.failures.to_string(),
                c.witness.clone().unwrap_or_default(),
            ]
        })
        .collect();
    table(&["check", "result", "checked", "failures", "witness"], &rows)
}

/// "1-2 2=>3": '-' single bond, '=' double, '≡' triple, '>' pointing at the
/// shorter root.
pub fn edge_list(edges: &[Edge]) -> String {
    let bonds: Vec<String> = edges
        .iter()
        .map(|Edge(i, j, m, arrow)| {
            let bond = match m {
                1 => "-",
                2 => "=",
                3 => "≡",
                _ => "≣",
            };
            match arrow {
                1 => format!("{i}{bond}>{j}"),
                -1 => format!("{i}<{bond}{j}"),
                _ => format!("{i}{bond}{j}"),
            }
        })
        .collect();
    bonds.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_line_up() {
        let t = table(&["a", "bb"], &[vec!["ψ".into(), "1".into()], vec!["xyz".into(), "22".into()]]);
        assert_eq!(t, "a    bb\nψ    1\nxyz  22\n");
    }

    #[test]
    fn bonds() {
        assert_eq!(edge_list(&[Edge(1, 2, 1, 0), Edge(2, 3, 2, 1), Edge(0, 1, 2, 0)]), "1-2 2=>3 0=1");
    }
}
