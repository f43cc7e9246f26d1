//! DOT and JSON-lines exports of Schreier graph balls.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::gamma::{ball_edges, in_gamma_plus, ball_with_distances, LabelledEdge};
use crate::omega::OmegaSequence;
use crate::ray::Ray;
use crate::word::Letter;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Jsonl,
}

pub fn letter_color(x: Letter) -> &'static str {
    match x {
        Letter::A => "red",
        Letter::B => "blue",
        Letter::C => "green",
        Letter::D => "orange",
    }
}

/// The labelled ball of radius `radius` around `0^∞`, vertices ordered along
/// the line and edges ordered by their endpoints' positions, then label.
pub struct SchreierBall {
    pub omega: OmegaSequence,
    pub radius: usize,
    pub vertices: Vec<(i64, Ray)>,
    pub edges: Vec<LabelledEdge>,
}

impl SchreierBall {
    pub fn new(omega: &OmegaSequence, radius: usize) -> Self {
        let coordinates: BTreeMap<Ray, i64> = ball_with_distances(omega, &Ray::zero(), radius)
            .into_iter()
            .map(|(x, d)| {
                let c = if in_gamma_plus(&x) { d as i64 } else { -(d as i64) };
                (x, c)
            })
            .collect();
        let (_, edges) = ball_edges(omega, radius);
        let mut vertices: Vec<(i64, Ray)> = coordinates.iter().map(|(x, &c)| (c, x.clone())).collect();
        vertices.sort();
        let mut edges: Vec<LabelledEdge> = edges
            .into_iter()
            .map(|e| {
                if coordinates[&e.source] <= coordinates[&e.target] {
                    e
                } else {
                    LabelledEdge { source: e.target, target: e.source, label: e.label }
                }
            })
            .collect();
        edges.sort_by_key(|e| (coordinates[&e.source], coordinates[&e.target], e.label));
        Self { omega: omega.clone(), radius, vertices, edges }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph schreier {{").unwrap();
        writeln!(out, "  // omega {}, radius {}", self.omega, self.radius).unwrap();
        writeln!(out, "  node [shape=circle];").unwrap();
        for (c, x) in &self.vertices {
            writeln!(out, "  \"{x}\" [label=\"{}\", pos=\"{c},0!\"];", x.dot_label()).unwrap();
        }
        for e in &self.edges {
            writeln!(
                out,
                "  \"{}\" -- \"{}\" [label=\"{}\", color=\"{}\"];",
                e.source,
                e.target,
                e.label,
                letter_color(e.label)
            )
            .unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }

    /// One `{source, target, label}` record per edge.
    pub fn to_jsonl(&self) -> String {
        self.edges.iter().map(|e| serde_json::to_string(e).expect("serialisable") + "\n").collect()
    }

    pub fn render(&self, format: GraphFormat) -> String {
        match format {
            GraphFormat::Dot => self.to_dot(),
            GraphFormat::Jsonl => self.to_jsonl(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radius_zero_has_one_node() {
        let ball = SchreierBall::new(&":012".parse().unwrap(), 0);
        assert_eq!(ball.vertices.len(), 1);
        let dot = ball.to_dot();
        assert_eq!(dot.matches("[label=\"0^inf\"").count(), 1);
        // the only edge inside is the loop d at 0^inf
        assert_eq!(ball.to_jsonl(), "{\"source\":\"0inf\",\"target\":\"0inf\",\"label\":\"d\"}\n");
    }

    #[test]
    fn dot_is_deterministic_and_colored() {
        let omega = ":012".parse().unwrap();
        let first = SchreierBall::new(&omega, 5).to_dot();
        assert_eq!(first, SchreierBall::new(&omega, 5).to_dot());
        assert!(first.contains("\"0inf\" -- \"1\" [label=\"a\", color=\"red\"];"));
        assert!(first.contains("\"01\" -- \"0inf\" [label=\"b\", color=\"blue\"];"));
        assert!(first.contains("\"01\" -- \"0inf\" [label=\"c\", color=\"green\"];"));
        assert!(first.contains("\"0inf\" -- \"0inf\" [label=\"d\", color=\"orange\"];"));
    }

    #[test]
    fn jsonl_line_count_is_edge_count() {
        let ball = SchreierBall::new(&":01".parse().unwrap(), 7);
        assert_eq!(ball.to_jsonl().lines().count(), ball.edges.len());
        // 15 vertices with 4 labels each, minus the edges leaving the ball:
        // a double edge beyond +7 and an a-edge beyond -7
        let incidences: usize = ball.edges.iter().map(|e| if e.is_loop() { 1 } else { 2 }).sum();
        assert_eq!(incidences, 4 * 15 - 3);
    }
}
