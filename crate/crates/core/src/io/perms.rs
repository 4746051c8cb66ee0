use std::fmt::Write;

use super::{content_lines, parse_usize, LoadError, MAX_DEGREE};
use crate::constructions::from_permutations;
use crate::group::FiniteGroup;

/// Parses `degree d generators g` followed by `g` lines of `d` images.
pub fn parse_permutations(text: &str) -> Result<FiniteGroup, LoadError> {
    let mut lines = content_lines(text);
    let Some((first, header)) = lines.next() else {
        return Err(LoadError::format(1, "missing header line"));
    };
    let tokens: Vec<&str> = header.split_ascii_whitespace().collect();
    let [kw_degree, degree, kw_gens, count] = tokens[..] else {
        return Err(LoadError::format(
            first,
            "expected `degree <d> generators <g>`",
        ));
    };
    if kw_degree != "degree" || kw_gens != "generators" {
        return Err(LoadError::format(
            first,
            "expected `degree <d> generators <g>`",
        ));
    }
    let degree = parse_usize(first, degree, "degree")?;
    let count = parse_usize(first, count, "generator count")?;
    if degree == 0 || degree > MAX_DEGREE {
        return Err(LoadError::format(
            first,
            format!("degree must be between 1 and {MAX_DEGREE}, got {degree}"),
        ));
    }

    let mut generators = Vec::new();
    let mut last = first;
    for k in 0..count {
        let Some((line, content)) = lines.next() else {
            return Err(LoadError::format(
                last + 1,
                format!("expected {count} generators, found {k}"),
            ));
        };
        last = line;
        let mut seen = vec![false; degree];
        let mut images = Vec::with_capacity(degree);
        for token in content.split_ascii_whitespace() {
            let v = parse_usize(line, token, "image")?;
            if images.len() == degree {
                return Err(LoadError::format(
                    line,
                    format!("more than {degree} images"),
                ));
            }
            if v >= degree {
                return Err(LoadError::format(line, format!("image {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(LoadError::format(
                    line,
                    format!("image {v} repeated; not a bijection"),
                ));
            }
            images.push(v);
        }
        if images.len() != degree {
            return Err(LoadError::format(
                line,
                format!("{} images, expected {degree}", images.len()),
            ));
        }
        generators.push(images);
    }
    if let Some((line, _)) = lines.next() {
        return Err(LoadError::format(
            line,
            "unexpected content after the last generator",
        ));
    }
    Ok(from_permutations(degree, &generators)?)
}

pub fn render_permutations(degree: usize, generators: &[Vec<usize>]) -> String {
    let mut out = format!("degree {degree} generators {}\n", generators.len());
    for g in generators {
        let line: Vec<String> = g.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::GroupError;

    #[test]
    fn a5_from_generators() {
        let text = render_permutations(5, &[vec![1, 2, 0, 3, 4], vec![1, 2, 3, 4, 0]]);
        assert_eq!(parse_permutations(&text).unwrap().order(), 60);
    }

    #[test]
    fn identity_alone_is_trivial() {
        let g = parse_permutations("degree 3 generators 1\n0 1 2\n").unwrap();
        assert_eq!(g.order(), 1);
        let g = parse_permutations("degree 3 generators 0\n").unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn format_errors() {
        let cases = [
            ("", 1),
            ("degree 3\n", 1),
            ("order 3 generators 1\n0 1 2\n", 1),
            ("degree 0 generators 0\n", 1),
            ("degree 3 generators 1\n0 0 2\n", 2),
            ("degree 3 generators 1\n0 1 3\n", 2),
            ("degree 3 generators 1\n0 1\n", 2),
            ("degree 3 generators 1\n0 1 2 0\n", 2),
            ("degree 3 generators 2\n0 1 2\n", 3),
            ("degree 3 generators 1\n0 1 2\n1 0 2\n", 3),
        ];
        for (text, want) in cases {
            match parse_permutations(text) {
                Err(LoadError::Format { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?}: expected a format error, got {other:?}"),
            }
        }
    }

    #[test]
    fn closure_cap() {
        // S8 has 40320 elements.
        let text = "degree 8 generators 2\n1 0 2 3 4 5 6 7\n1 2 3 4 5 6 7 0\n";
        assert!(matches!(
            parse_permutations(text),
            Err(LoadError::Group(GroupError::TooLarge { .. }))
        ));
    }
}
