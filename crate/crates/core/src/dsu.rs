/// Disjoint-set forest with union by size and no path compression, so that
/// unions can be undone in LIFO order during backtracking.
#[derive(Clone, Debug)]
pub(crate) struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<Option<(usize, usize)>>,
    components: usize,
}

impl DisjointSet {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
            components: n,
        }
    }

    pub(crate) fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; returns false if already joined.
    /// Every call pushes one history entry so that [`Self::undo`] pairs with it.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        self.history.push(Some((ra, rb)));
        true
    }

    pub(crate) fn undo(&mut self) {
        if let Some(Some((ra, rb))) = self.history.pop() {
            self.parent[rb] = rb;
            self.size[ra] -= self.size[rb];
            self.components += 1;
        }
    }

    pub(crate) fn components(&self) -> usize {
        self.components
    }
}

#[cfg(test)]
mod tests {
    use super::DisjointSet;

    #[test]
    fn union_and_undo() {
        let mut d = DisjointSet::new(4);
        assert!(d.union(0, 1));
        assert!(d.union(2, 3));
        assert!(!d.union(1, 0));
        assert!(d.union(1, 3));
        assert_eq!(d.components(), 1);
        d.undo();
        d.undo();
        assert_eq!(d.components(), 2);
        assert_eq!(d.find(0), d.find(1));
        assert_ne!(d.find(0), d.find(2));
        d.undo();
        d.undo();
        assert_eq!(d.components(), 4);
    }
}
