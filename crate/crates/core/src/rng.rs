//! Deterministic pseudo-random generation for seeded sweeps. SplitMix64 is
//! tiny and stable across platforms, which keeps CI byte-reproducible.

use crate::quiver::Quiver;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in 0..bound (bound > 0).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

/// Random acyclic loop-free quiver on up to `max_vertices` vertices; arrows
/// only go from lower to higher index, multiplicities up to 2.
pub fn random_acyclic_quiver(rng: &mut SplitMix64, max_vertices: usize) -> Quiver {
    let n = 1 + rng.below(max_vertices as u64) as usize;
    let mut q = Quiver::new();
    for i in 0..n {
        q.add_vertex(&format!("e{i}"), &format!("e{i}")).unwrap();
    }
    let mut serial = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            // roughly half the pairs get an arrow, a few get a double
            if rng.chance(1, 2) {
                q.add_arrow(&format!("a{serial}"), &format!("e{i}"), &format!("e{j}"))
                    .unwrap();
                serial += 1;
                if rng.chance(1, 6) {
                    q.add_arrow(&format!("a{serial}"), &format!("e{i}"), &format!("e{j}"))
                        .unwrap();
                    serial += 1;
                }
            }
        }
    }
    q
}

/// Random orientation of a Dynkin diagram template, as a quiver.
pub fn random_dynkin_orientation(
    rng: &mut SplitMix64,
    family: crate::diagram::DiagramFamily,
) -> Option<Quiver> {
    let g = crate::diagram::template(family)?;
    let ids = g.vertex_ids().to_vec();
    let mut q = Quiver::new();
    for id in &ids {
        q.add_vertex(id, id).unwrap();
    }
    let mut serial = 0;
    for i in 0..ids.len() {
        for j in (i + 1)..ids.len() {
            for _ in 0..g.multiplicity(i, j) {
                let (src, dst) = if rng.chance(1, 2) { (i, j) } else { (j, i) };
                q.add_arrow(&format!("a{serial}"), &ids[src], &ids[dst])
                    .unwrap();
                serial += 1;
            }
        }
    }
    Some(q)
}
