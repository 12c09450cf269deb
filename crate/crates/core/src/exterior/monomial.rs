use std::fmt;

/// A wedge monomial `dz_H ∧ dz̄_A` in canonical order: every `dz` factor
/// (ascending index) precedes every `dz̄` factor (ascending index).
///
/// Bit `k - 1` of a mask selects the generator with index `k`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub holo: u16,
    pub anti: u16,
}

/// Number of pairs `(i, j)` with `i ∈ x`, `j ∈ y` and `i > j`.
fn crossings(x: u16, y: u16) -> u32 {
    let mut count = 0;
    let mut rest = y;
    while rest != 0 {
        let j = rest.trailing_zeros();
        count += (x as u32 >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    count
}

impl Monomial {
    pub const ONE: Monomial = Monomial { holo: 0, anti: 0 };

    pub fn new(holo: u16, anti: u16) -> Self {
        Self { holo, anti }
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.holo.count_ones() as usize, self.anti.count_ones() as usize)
    }

    pub fn degree(&self) -> usize {
        let (p, q) = self.bidegree();
        p + q
    }

    /// Largest generator index used (0 for the unit monomial).
    pub fn max_index(&self) -> usize {
        (16 - (self.holo | self.anti).leading_zeros()) as usize
    }

    /// Product `self ∧ other` as `(odd_sign, monomial)`, or `None` if a
    /// generator repeats. `odd_sign` is true when the Koszul sign is −1.
    pub fn wedge(&self, other: &Monomial) -> Option<(bool, Monomial)> {
        if self.holo & other.holo != 0 || self.anti & other.anti != 0 {
            return None;
        }
        // dz_{H1} dz̄_{A1} dz_{H2} dz̄_{A2}: move dz_{H2} left past dz̄_{A1},
        // then merge each block into ascending order.
        let swaps = self.anti.count_ones() * other.holo.count_ones()
            + crossings(self.holo, other.holo)
            + crossings(self.anti, other.anti);
        Some((
            swaps % 2 == 1,
            Monomial::new(self.holo | other.holo, self.anti | other.anti),
        ))
    }

    /// Conjugate monomial and whether the reordering sign is −1:
    /// `conj(dz_H ∧ dz̄_A) = dz̄_H ∧ dz_A = (−1)^{|H||A|} dz_A ∧ dz̄_H`.
    pub fn conjugate(&self) -> (bool, Monomial) {
        let odd = (self.holo.count_ones() * self.anti.count_ones()) % 2 == 1;
        (odd, Monomial::new(self.anti, self.holo))
    }

    pub fn holo_indices(&self) -> Vec<usize> {
        mask_indices(self.holo)
    }

    pub fn anti_indices(&self) -> Vec<usize> {
        mask_indices(self.anti)
    }
}

/// 1-based indices of the set bits, ascending.
pub fn mask_indices(mask: u16) -> Vec<usize> {
    (0..16).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holo == 0 && self.anti == 0 {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = self.holo_indices().iter().map(|k| format!("dz{k}")).collect();
        parts.extend(self.anti_indices().iter().map(|k| format!("dz̄{k}")));
        write!(f, "{}", parts.join("∧"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repeated_generator_vanishes() {
        let dz1 = Monomial::new(1, 0);
        assert!(dz1.wedge(&dz1).is_none());
    }

    #[test]
    fn odd_generators_anticommute() {
        let dz1 = Monomial::new(1, 0);
        let dzb1 = Monomial::new(0, 1);
        assert_eq!(dz1.wedge(&dzb1), Some((false, Monomial::new(1, 1))));
        assert_eq!(dzb1.wedge(&dz1), Some((true, Monomial::new(1, 1))));
    }

    #[test]
    fn crossing_counts() {
        assert_eq!(crossings(0b100, 0b011), 2);
        assert_eq!(crossings(0b001, 0b110), 0);
        assert_eq!(crossings(0b101, 0b010), 1);
    }

    #[test]
    fn conjugation_sign() {
        // conj(dz1∧dz̄2) = dz̄1∧dz2 = −dz2∧dz̄1
        let (odd, m) = Monomial::new(0b01, 0b10).conjugate();
        assert!(odd);
        assert_eq!(m, Monomial::new(0b10, 0b01));
    }
}
