/// Search budgets and reproducibility knobs shared by every exhaustive routine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of enumeration steps (subspaces or search nodes) per call.
    pub budget: u64,
    /// Largest Hom space (in elements) searched exhaustively for an isomorphism.
    pub iso_exhaustive: u64,
    /// Random trials before giving up on the random isomorphism search.
    pub random_trials: usize,
    pub seed: u64,
    /// Fan work out over rayon when the `parallel` feature is enabled.
    pub parallel: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            budget: 10_000_000,
            iso_exhaustive: 1_000_000,
            random_trials: 200,
            seed: 0,
            parallel: true,
        }
    }
}

impl Limits {
    pub fn sequential() -> Self {
        Limits {
            parallel: false,
            ..Limits::default()
        }
    }
}
