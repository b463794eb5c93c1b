use super::roots::SignedRoot;

/// A group element stored as its action on the positive roots:
/// `w(β_i) = image[i]`. Simple roots occupy indices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    image: Vec<SignedRoot>,
}

impl Element {
    pub fn identity(num_roots: usize) -> Element {
        Element { image: (0..num_roots).map(SignedRoot::pos).collect() }
    }

    pub(crate) fn from_image(image: Vec<SignedRoot>) -> Element {
        Element { image }
    }

    pub fn image(&self) -> &[SignedRoot] {
        &self.image
    }

    /// `w(r)` for a signed positive root.
    pub fn apply(&self, r: SignedRoot) -> SignedRoot {
        let img = self.image[r.index];
        if r.positive {
            img
        } else {
            img.negated()
        }
    }

    /// The product `self · other` (apply `other` first).
    pub fn compose(&self, other: &Element) -> Element {
        Element { image: other.image.iter().map(|&r| self.apply(r)).collect() }
    }

    pub fn inverse(&self) -> Element {
        let mut image = vec![SignedRoot::pos(0); self.image.len()];
        for (i, r) in self.image.iter().enumerate() {
            image[r.index] = SignedRoot { index: i, positive: r.positive };
        }
        Element { image }
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.image.iter().filter(|r| !r.positive).count()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, r)| r.positive && r.index == i)
    }

    /// `ℓ(w·s) < ℓ(w)`, i.e. `w(α_s) < 0`.
    pub fn is_right_descent(&self, s: usize) -> bool {
        !self.image[s].positive
    }

    /// `ℓ(s·w) < ℓ(w)`, i.e. `w⁻¹(α_s) < 0`.
    pub fn is_left_descent(&self, s: usize) -> bool {
        // w⁻¹(α_s) < 0 iff α_s = w(−β) for some positive β
        self.image.iter().any(|r| r.index == s && !r.positive)
    }

    pub fn right_descents(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|&s| self.is_right_descent(s)).collect()
    }

    /// Indices of the positive roots `β` with `w⁻¹(β) < 0`, ascending.
    pub fn inversion_set(&self) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.image.iter().filter(|r| !r.positive).map(|r| r.index).collect();
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_laws() {
        let e = Element::identity(3);
        assert!(e.is_identity());
        assert_eq!(e.length(), 0);
        assert_eq!(e.inverse(), e);
        // a transposition-with-sign on three roots
        let w = Element::from_image(vec![SignedRoot::neg(0), SignedRoot::pos(2), SignedRoot::pos(1)]);
        assert_eq!(w.compose(&w.inverse()), e);
        assert_eq!(w.inverse().compose(&w), e);
        assert_eq!(w.length(), 1);
        assert!(w.is_right_descent(0));
        assert!(w.is_left_descent(0));
        assert_eq!(w.inversion_set(), vec![0]);
    }
}
