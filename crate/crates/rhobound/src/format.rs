//! Text rendering helpers shared by the CLI reports.

/// Four-decimal display that prints exact short decimals minimally:
/// 2 -> "2", 2.5 -> "2.5", 13/6 -> "2.1667", and keeps a meaningful
/// trailing zero for rounded values such as "2.2240".
pub fn fmt4(x: f64) -> String {
    let scaled = x * 1e4;
    let exact_short = (scaled - scaled.round()).abs() < 1e-9 * scaled.abs().max(1.0);
    let mut s = format!("{x:.4}");
    if exact_short {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

/// Two-decimal alpha display.
pub fn fmt_alpha(a: f64) -> String {
    format!("{a:.2}")
}

/// Vertex display order: numeric when every label parses as an integer,
/// otherwise lexicographic. Reports stay readable for numeric labels
/// without changing the library's first-appearance indexing.
pub fn display_order(labels: &[String]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..labels.len()).collect();
    let all_numeric = labels.iter().all(|l| l.parse::<u64>().is_ok());
    if all_numeric {
        order.sort_by_key(|&i| labels[i].parse::<u64>().unwrap());
    } else {
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
    }
    order
}

/// Plain-text table with a left-aligned first column and right-aligned
/// value columns.
#[derive(Debug, Default)]
pub struct TextTable {
    rows: Vec<Vec<String>>,
}

impl TextTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn row<I: IntoIterator<Item = String>>(&mut self, cells: I) {
        self.rows.push(cells.into_iter().collect());
    }

    pub fn render(&self) -> String {
        let columns = self.rows.iter().map(|r| r.len()).max().unwrap_or(0);
        let mut widths = vec![0usize; columns];
        for row in &self.rows {
            for (c, cell) in row.iter().enumerate() {
                widths[c] = widths[c].max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for row in &self.rows {
            let mut line = String::new();
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    line.push_str("  ");
                }
                let pad = widths[c] - cell.chars().count();
                if c == 0 {
                    line.push_str(cell);
                    if row.len() > 1 {
                        line.push_str(&" ".repeat(pad));
                    }
                } else {
                    line.push_str(&" ".repeat(pad));
                    line.push_str(cell);
                }
            }
            while line.ends_with(' ') {
                line.pop();
            }
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fmt4_matches_reference_table_style() {
        assert_eq!(fmt4(2.0), "2");
        assert_eq!(fmt4(2.5), "2.5");
        assert_eq!(fmt4(2.25), "2.25");
        assert_eq!(fmt4(2.2), "2.2");
        assert_eq!(fmt4(11.0 / 5.0), "2.2");
        assert_eq!(fmt4(13.0 / 6.0), "2.1667");
        assert_eq!(fmt4(29.0 / 13.0), "2.2308");
        assert_eq!(fmt4(6f64.sqrt()), "2.4495");
        assert_eq!(fmt4(11.5f64.cbrt()), "2.2572");
        // A rounded value keeps its trailing zero.
        assert_eq!(fmt4(11f64.cbrt()), "2.2240");
        assert_eq!(fmt4(0.0), "0");
    }

    #[test]
    fn display_order_is_numeric_when_possible() {
        let labels: Vec<String> = ["1", "4", "5", "2", "3"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(display_order(&labels), vec![0, 3, 4, 1, 2]);
        let labels: Vec<String> = ["b", "a", "10"].iter().map(|s| s.to_string()).collect();
        assert_eq!(display_order(&labels), vec![2, 1, 0]);
    }

    #[test]
    fn table_alignment() {
        let mut t = TextTable::new();
        t.row(["(k,L)".to_string(), "min".to_string(), "max".to_string()]);
        t.row(["(0,1)".to_string(), "2".to_string(), "3".to_string()]);
        t.row(["(0,10)".to_string(), "2.4495".to_string(), "12".to_string()]);
        let rendered = t.render();
        let lines: Vec<&str> = rendered.lines().collect();
        assert_eq!(lines[0], "(k,L)      min  max");
        assert_eq!(lines[1], "(0,1)        2    3");
        assert_eq!(lines[2], "(0,10)  2.4495   12");
    }
}
