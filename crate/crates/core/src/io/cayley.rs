use std::fmt::Write;

use super::{content_lines, parse_usize, LoadError, MAX_TABLE_ORDER};
use crate::group::FiniteGroup;

/// Parses a Cayley-table file: the order `n`, then `n` rows of `n`
/// space-separated 0-based indices. `#` lines are comments; the first
/// `# name: <text>` comment names the group.
pub fn parse_cayley(text: &str) -> Result<FiniteGroup, LoadError> {
    let name = text
        .lines()
        .filter_map(|l| l.trim().strip_prefix('#'))
        .find_map(|c| c.trim_start().strip_prefix("name:"))
        .map(|n| n.trim().to_string())
        .unwrap_or_default();

    let mut lines = content_lines(text);
    let Some((first, order_text)) = lines.next() else {
        return Err(LoadError::format(1, "missing order line"));
    };
    let order = parse_usize(first, order_text, "order")?;
    if order == 0 || order > MAX_TABLE_ORDER {
        return Err(LoadError::format(
            first,
            format!("order must be between 1 and {MAX_TABLE_ORDER}, got {order}"),
        ));
    }

    let mut table = Vec::with_capacity(order * order);
    let mut last = first;
    for row in 0..order {
        let Some((line, content)) = lines.next() else {
            return Err(LoadError::format(
                last + 1,
                format!("expected {order} rows, found {row}"),
            ));
        };
        last = line;
        let before = table.len();
        for token in content.split_ascii_whitespace() {
            let v = parse_usize(line, token, "entry")?;
            if v >= order {
                return Err(LoadError::format(
                    line,
                    format!("entry {v} out of range for order {order}"),
                ));
            }
            if table.len() - before == order {
                return Err(LoadError::format(
                    line,
                    format!("row has more than {order} entries"),
                ));
            }
            table.push(v as u32);
        }
        if table.len() - before != order {
            return Err(LoadError::format(
                line,
                format!("row has {} entries, expected {order}", table.len() - before),
            ));
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(LoadError::format(
            line,
            "unexpected content after the last row",
        ));
    }
    Ok(FiniteGroup::from_flat_table(order, table, name)?)
}

pub fn render_cayley(g: &FiniteGroup) -> String {
    let mut out = String::new();
    if !g.name().is_empty() {
        let _ = writeln!(out, "# name: {}", g.name().replace('\n', " "));
    }
    let _ = writeln!(out, "{}", g.order());
    for row in g.rows() {
        let mut first = true;
        for v in row {
            if !first {
                out.push(' ');
            }
            first = false;
            let _ = write!(out, "{v}");
        }
        out.push('\n');
    }
    out
}
