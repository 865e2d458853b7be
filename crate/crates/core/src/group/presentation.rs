use std::fmt;

use crate::signature::Signature;

use super::GroupError;

/// A generator of the orbifold group of a closed orientable cone-only
/// orbifold. Indices are 1-based, matching the rendered names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A(usize),
    B(usize),
    X(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::A(j) => write!(f, "a{j}"),
            Generator::B(j) => write!(f, "b{j}"),
            Generator::X(j) => write!(f, "x{j}"),
        }
    }
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inverted(self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

pub type Word = Vec<Letter>;

/// `<a_1, b_1, ..., a_g, b_g, x_1, ..., x_k | x_j^{p_j}, [a_1,b_1]...[a_g,b_g] x_1...x_k>`
///
/// Generator ids run `a_1, b_1, ..., a_g, b_g, x_1, ..., x_k`; relators are
/// the `k` power relators followed by the long relator. The commutator is
/// `[a, b] = a b a^-1 b^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    handle_pairs: usize,
    cone_orders: Vec<u32>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(handle_pairs: usize, cone_orders: Vec<u32>) -> Self {
        let g = handle_pairs;
        let k = cone_orders.len();
        let fwd = |generator| Letter {
            generator,
            inverse: false,
        };
        let mut relators: Vec<Word> = cone_orders
            .iter()
            .enumerate()
            .map(|(j, &p)| vec![fwd(2 * g + j); p as usize])
            .collect();
        let mut long = Vec::with_capacity(4 * g + k);
        for j in 0..g {
            let (a, b) = (fwd(2 * j), fwd(2 * j + 1));
            long.extend([a, b, a.inverted(), b.inverted()]);
        }
        long.extend((0..k).map(|j| fwd(2 * g + j)));
        relators.push(long);
        Presentation {
            handle_pairs,
            cone_orders,
            relators,
        }
    }

    pub fn handle_pairs(&self) -> usize {
        self.handle_pairs
    }

    pub fn cone_orders(&self) -> &[u32] {
        &self.cone_orders
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// The relator `[a_1,b_1]...[a_g,b_g] x_1...x_k`.
    pub fn long_relator(&self) -> &Word {
        self.relators.last().expect("long relator always present")
    }

    pub fn generator_count(&self) -> usize {
        2 * self.handle_pairs + self.cone_orders.len()
    }

    pub fn generator(&self, id: usize) -> Generator {
        let g2 = 2 * self.handle_pairs;
        if id < g2 {
            if id.is_multiple_of(2) {
                Generator::A(id / 2 + 1)
            } else {
                Generator::B(id / 2 + 1)
            }
        } else {
            Generator::X(id - g2 + 1)
        }
    }

    /// Order of generator `id` when it is a cone generator.
    pub fn cone_order(&self, id: usize) -> Option<u32> {
        id.checked_sub(2 * self.handle_pairs)
            .and_then(|j| self.cone_orders.get(j).copied())
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (0..self.generator_count())
            .map(|id| self.generator(id).to_string())
            .collect();
        write!(f, "<{} | ", gens.join(","))?;
        let mut parts: Vec<String> = self
            .cone_orders
            .iter()
            .enumerate()
            .map(|(j, p)| format!("x{}^{p}", j + 1))
            .collect();
        let mut long: Vec<String> = (1..=self.handle_pairs)
            .map(|j| format!("[a{j},b{j}]"))
            .collect();
        long.extend((1..=self.cone_orders.len()).map(|j| format!("x{j}")));
        parts.push(if long.is_empty() {
            "1".to_string()
        } else {
            long.join(" ")
        });
        write!(f, "{}>", parts.join(", "))
    }
}

/// The standard presentation of a closed orientable cone-only orbifold.
pub fn presentation_of_closed(sig: &Signature) -> Result<Presentation, GroupError> {
    if !sig.is_reduced() {
        return Err(GroupError::NotReduced(Box::new(sig.clone())));
    }
    Ok(Presentation::new(
        sig.genus() as usize,
        sig.cones().to_vec(),
    ))
}
