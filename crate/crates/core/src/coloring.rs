use serde::Serialize;

/// A total vertex coloring with colors `0..count`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    colors: Vec<usize>,
    count: usize,
}

impl Coloring {
    /// Wraps an assignment, renumbering colors densely in order of first use.
    pub fn from_assignment(assignment: Vec<usize>) -> Self {
        let mut remap = std::collections::HashMap::new();
        let colors: Vec<usize> = assignment
            .into_iter()
            .map(|c| {
                let next = remap.len();
                *remap.entry(c).or_insert(next)
            })
            .collect();
        let count = remap.len();
        Coloring { colors, count }
    }

    /// Wraps an assignment whose colors already are exactly `0..count`.
    ///
    /// Returns `None` if some color below the maximum is unused.
    pub fn from_dense(colors: Vec<usize>) -> Option<Self> {
        let count = colors.iter().max().map_or(0, |m| m + 1);
        let mut seen = vec![false; count];
        for &c in &colors {
            seen[c] = true;
        }
        seen.iter().all(|&s| s).then_some(Coloring { colors, count })
    }

    pub fn empty() -> Self {
        Coloring { colors: Vec::new(), count: 0 }
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn into_colors(self) -> Vec<usize> {
        self.colors
    }

    /// Vertices grouped by color.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}
