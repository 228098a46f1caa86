//! Text formats: comma-separated generator lists and the facet-list grammar.
//!
//! A facet list names 1-based vertices separated by `,`, facets separated by
//! `;`, and trees of a forest separated by `|`, e.g. `1,2,3;2,3,4|5,6`.
//! All trees share the vertex set `1..=d` where `d` is the largest label.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

pub fn parse_generators(text: &str) -> Result<Vec<i64>> {
    let gens = text
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<i64>()
                .ok()
                .filter(|&g| g >= 1)
                .ok_or_else(|| Error::InvalidInput(format!("bad generator {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(gens)
}

fn parse_facet(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<usize>()
                .ok()
                .filter(|&v| v >= 1)
                .ok_or_else(|| Error::InvalidInput(format!("bad vertex {t:?}")))
        })
        .collect()
}

fn parse_groups(text: &str) -> Result<(usize, Vec<Vec<Vec<usize>>>)> {
    let groups = text
        .split('|')
        .map(|tree| tree.split(';').map(parse_facet).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let d = groups
        .iter()
        .flatten()
        .flatten()
        .copied()
        .max()
        .unwrap_or(0);
    Ok((d, groups))
}

/// One complex per `|`-separated group.
pub fn parse_forest(text: &str) -> Result<Vec<SimplicialComplex>> {
    let (d, groups) = parse_groups(text)?;
    groups
        .iter()
        .map(|facets| SimplicialComplex::from_facets(d, facets))
        .collect()
}

/// The whole text as one complex; `|` acts like `;`.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let (d, groups) = parse_groups(text)?;
    let facets: Vec<Vec<usize>> = groups.into_iter().flatten().collect();
    SimplicialComplex::from_facets(d, &facets)
}

pub fn format_complex(complex: &SimplicialComplex) -> String {
    complex
        .facet_lists()
        .iter()
        .map(|f| {
            f.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";")
}
