//! Three-valued outcomes for decision procedures.

/// Outcome of a check: proved, disproved, or undecided within budgets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<C, R, I> {
    Certified(C),
    Refuted(R),
    Inconclusive(I),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Certified,
    Refuted,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Certified => "certified",
            Status::Refuted => "refuted",
            Status::Inconclusive => "inconclusive",
        }
    }

    /// Conjunction: any refutation wins, then any undecided part.
    pub fn and(self, other: Status) -> Status {
        use Status::*;
        match (self, other) {
            (Refuted, _) | (_, Refuted) => Refuted,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Certified,
        }
    }
}

impl<C, R, I> Verdict<C, R, I> {
    pub fn status(&self) -> Status {
        match self {
            Verdict::Certified(_) => Status::Certified,
            Verdict::Refuted(_) => Status::Refuted,
            Verdict::Inconclusive(_) => Status::Inconclusive,
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::Certified(_))
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Verdict::Refuted(_))
    }

    pub fn certified(&self) -> Option<&C> {
        match self {
            Verdict::Certified(c) => Some(c),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::Status::*;

    #[test]
    fn conjunction() {
        assert_eq!(Certified.and(Certified), Certified);
        assert_eq!(Certified.and(Inconclusive), Inconclusive);
        assert_eq!(Inconclusive.and(Refuted), Refuted);
        assert_eq!(Refuted.and(Certified), Refuted);
    }
}
