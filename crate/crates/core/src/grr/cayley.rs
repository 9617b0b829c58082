use std::collections::VecDeque;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Enumeration, PermGroup, Permutation};

/// The generator carried by an edge slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Connection {
    X,
    XInv,
    Y,
}

/// `Cay(G, {x, x⁻¹, y})`: `g ~ s·g` for each `s` in the connection set.
///
/// Vertices are numbered breadth-first from the identity, trying neighbours
/// in slot order `x, x⁻¹, y`. When the pair does not generate, the next
/// component starts from the unvisited element that comes first in the
/// group enumeration.
#[derive(Debug, Clone)]
pub struct CubicCayleyGraph {
    adjacency: Vec<[u32; 3]>,
    vertex_element: Vec<u32>,
    element_vertex: Vec<u32>,
    component_sizes: Vec<usize>,
    elements: Arc<Enumeration>,
}

impl CubicCayleyGraph {
    pub const CONNECTION_LABELS: [Connection; 3] = [Connection::X, Connection::XInv, Connection::Y];

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn adjacency(&self) -> &[[u32; 3]] {
        &self.adjacency
    }

    pub fn neighbors(&self, v: usize) -> [u32; 3] {
        self.adjacency[v]
    }

    /// The group element at vertex `v`.
    pub fn element(&self, v: usize) -> &Permutation {
        self.elements.get(self.vertex_element[v] as usize)
    }

    pub fn vertex_of(&self, g: &Permutation) -> Option<usize> {
        self.elements
            .index_of(g)
            .map(|i| self.element_vertex[i] as usize)
    }

    pub fn is_connected(&self) -> bool {
        self.component_sizes.len() == 1
    }

    pub fn component_count(&self) -> usize {
        self.component_sizes.len()
    }

    /// Sizes of the components in numbering order; the first one contains
    /// the identity and occupies vertices `0..size`.
    pub fn component_sizes(&self) -> &[usize] {
        &self.component_sizes
    }

    /// Whether right translation by `g` maps edges to edges.
    pub fn right_translation_is_automorphism(&self, g: &Permutation) -> bool {
        let Some(map) = (0..self.vertex_count())
            .map(|v| self.vertex_of(&self.element(v).mul(g)).map(|w| w as u32))
            .collect::<Option<Vec<u32>>>()
        else {
            return false;
        };
        (0..self.vertex_count()).all(|v| {
            let mut a = self.adjacency[v].map(|u| map[u as usize]);
            let mut b = self.adjacency[map[v] as usize];
            a.sort_unstable();
            b.sort_unstable();
            a == b
        })
    }

    /// Edge list with header `p cubic N M`, one `u v` line per edge (u < v).
    pub fn export(&self) -> String {
        let n = self.vertex_count();
        let mut out = String::new();
        let _ = writeln!(out, "p cubic {} {}", n, 3 * n / 2);
        for (u, nb) in self.adjacency.iter().enumerate() {
            for &v in nb {
                if (u as u32) < v {
                    let _ = writeln!(out, "{u} {v}");
                }
            }
        }
        out
    }
}

pub(crate) fn check_connection_set(x: &Permutation, y: &Permutation) -> Result<()> {
    if x.order() <= 2 {
        return Err(Error::InvalidInput(format!(
            "x must have order greater than 2, got {}",
            x.order()
        )));
    }
    if !y.is_involution() {
        return Err(Error::InvalidInput(format!(
            "y must be an involution, got order {}",
            y.order()
        )));
    }
    Ok(())
}

pub fn build_cayley(
    group: &PermGroup,
    x: &Permutation,
    y: &Permutation,
) -> Result<CubicCayleyGraph> {
    check_connection_set(x, y)?;
    let elements = group.enumerate()?;
    let conn = [x.clone(), x.inverse(), y.clone()];
    let n = elements.len();
    let lookup = |g: &Permutation| {
        elements
            .index_of(g)
            .ok_or_else(|| Error::InvalidInput("connection set is not inside the group".into()))
    };
    let mut element_vertex = vec![u32::MAX; n];
    let mut vertex_element = Vec::with_capacity(n);
    let mut component_sizes = Vec::new();
    let mut queue = VecDeque::new();
    let mut next_start = 0;
    while vertex_element.len() < n {
        while element_vertex[next_start] != u32::MAX {
            next_start += 1;
        }
        let before = vertex_element.len();
        element_vertex[next_start] = before as u32;
        vertex_element.push(next_start as u32);
        queue.push_back(next_start);
        while let Some(i) = queue.pop_front() {
            let g = elements.get(i);
            for s in &conn {
                let j = lookup(&s.mul(g))?;
                if element_vertex[j] == u32::MAX {
                    element_vertex[j] = vertex_element.len() as u32;
                    vertex_element.push(j as u32);
                    queue.push_back(j);
                }
            }
        }
        component_sizes.push(vertex_element.len() - before);
    }
    let mut adjacency = Vec::with_capacity(n);
    for &i in &vertex_element {
        let g = elements.get(i as usize);
        let mut slots = [0u32; 3];
        for (k, s) in conn.iter().enumerate() {
            slots[k] = element_vertex[lookup(&s.mul(g))?];
        }
        adjacency.push(slots);
    }
    Ok(CubicCayleyGraph {
        adjacency,
        vertex_element,
        element_vertex,
        component_sizes,
        elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{Family, GroupSpec};
    use crate::perm::{InvolutionMode, RngState};

    #[test]
    fn psl27_graph_shape() {
        let g = PermGroup::new(&GroupSpec::new(Family::Psl, 2, 7).unwrap()).unwrap();
        let mut rng = RngState::new(11);
        let mut seen_connected = false;
        let mut seen_disconnected = false;
        for k in 0..40 {
            let x = g
                .find_ppd_element(if k % 2 == 0 { 7 } else { 3 }, &mut rng)
                .unwrap();
            let y = g
                .sample_involution(InvolutionMode::Uniform, &mut rng)
                .unwrap();
            let graph = build_cayley(&g, &x, &y).unwrap();
            assert_eq!(graph.vertex_count(), 168);
            assert_eq!(graph.element(0), &g.identity());
            for v in 0..168 {
                for &u in &graph.neighbors(v) {
                    assert!(graph.neighbors(u as usize).contains(&(v as u32)));
                    assert_ne!(u as usize, v);
                }
                let mut nb = graph.neighbors(v);
                nb.sort_unstable();
                assert!(nb[0] != nb[1] && nb[1] != nb[2]);
            }
            assert_eq!(graph.is_connected(), g.generation_test(&x, &y));
            if graph.is_connected() {
                seen_connected = true;
            } else {
                seen_disconnected = true;
                let h = graph.component_sizes()[0];
                assert!(graph.component_sizes().iter().all(|&s| s == h));
                assert_eq!(graph.component_count() * h, 168);
            }
            for _ in 0..3 {
                let t = g.random_element(&mut rng);
                assert!(graph.right_translation_is_automorphism(&t));
            }
            let text = graph.export();
            assert!(text.starts_with("p cubic 168 252\n"));
            assert_eq!(text.lines().count(), 253);
        }
        assert!(seen_connected && seen_disconnected);
    }

    #[test]
    fn rejects_bad_connection_sets() {
        let g = PermGroup::new(&GroupSpec::new(Family::Psl, 2, 4).unwrap()).unwrap();
        let mut rng = RngState::new(1);
        let y = g
            .sample_involution(InvolutionMode::Uniform, &mut rng)
            .unwrap();
        let x = g.find_ppd_element(5, &mut rng).unwrap();
        assert!(build_cayley(&g, &y, &y).is_err());
        assert!(build_cayley(&g, &x, &x).is_err());
        assert!(build_cayley(&g, &x, &y).is_ok());
    }
}
