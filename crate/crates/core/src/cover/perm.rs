use std::fmt;

/// A permutation of `0..n`, acting on the right: `p.then(q)` applies `p`
/// first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermutationError {
    #[error("image list is not a bijection of 0..{0}")]
    NotBijective(usize),
    #[error("cycle entry {0} out of range for degree {1}")]
    OutOfRange(u32, usize),
    #[error("point {0} appears in more than one cycle")]
    Repeated(u32),
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, PermutationError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            match seen.get_mut(i as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(PermutationError::NotBijective(n)),
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `0..n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<u32>]) -> Result<Self, PermutationError> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let slot = used
                    .get_mut(a as usize)
                    .ok_or(PermutationError::OutOfRange(a, n))?;
                if *slot {
                    return Err(PermutationError::Repeated(a));
                }
                *slot = true;
                images[a as usize] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&x| other.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn pow(&self, k: u32) -> Permutation {
        (0..k).fold(Permutation::identity(self.degree()), |acc, _| {
            acc.then(self)
        })
    }

    /// `[a, b] = a b a^-1 b^-1`, evaluated left to right.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        a.then(b).then(&a.inverse()).then(&b.inverse())
    }

    /// Disjoint cycles, each starting at its least point, sorted by that
    /// point. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x as usize] {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycles of length at least 2, in the same order as [`cycles`](Self::cycles).
    pub fn nontrivial_cycles(&self) -> Vec<Vec<u32>> {
        self.cycles().into_iter().filter(|c| c.len() > 1).collect()
    }

    /// Sorted cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    /// Whether every cycle has length exactly `len`.
    pub fn has_uniform_cycles(&self, len: usize) -> bool {
        self.cycles().iter().all(|c| c.len() == len)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.nontrivial_cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Whether the group generated by `gens` acts transitively on `0..n`.
pub fn is_transitive(n: usize, gens: &[&Permutation]) -> bool {
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0u32];
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for g in gens {
            for y in [g.apply(x), g.inverse().apply(x)] {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
    }
    count == n
}
