//! Edmonds' blossom algorithm (unweighted), BFS from one free root at a time.

use std::collections::VecDeque;

const NIL: usize = usize::MAX;

pub(crate) struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    pub mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    on_path: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    pub fn new(adj: &'a [Vec<usize>], mate: Vec<usize>) -> Self {
        let n = adj.len();
        debug_assert_eq!(mate.len(), n);
        Blossom {
            adj,
            mate,
            parent: vec![NIL; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            on_path: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.on_path.fill(false);
        loop {
            a = self.base[a];
            self.on_path[a] = true;
            if self.mate[a] == NIL {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches an augmenting path from the free vertex `root` and applies it.
    pub fn augment_from(&mut self, root: usize) -> bool {
        let n = self.adj.len();
        self.used.fill(false);
        self.parent.fill(NIL);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in &self.adj[v] {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NIL && self.parent[self.mate[to]] != NIL) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NIL {
                    self.parent[to] = v;
                    if self.mate[to] == NIL {
                        self.flip(to);
                        return true;
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        false
    }

    fn flip(&mut self, mut to: usize) {
        while to != NIL {
            let pv = self.parent[to];
            let next = self.mate[pv];
            self.mate[to] = pv;
            self.mate[pv] = to;
            to = next;
        }
    }

    /// Tries every free vertex as a root until one augmentation succeeds.
    pub fn augment_once(&mut self) -> bool {
        for root in 0..self.adj.len() {
            if self.mate[root] == NIL && !self.adj[root].is_empty() && self.augment_from(root) {
                return true;
            }
        }
        false
    }

    /// Runs to a maximum matching.
    pub fn run(&mut self) {
        for root in 0..self.adj.len() {
            if self.mate[root] == NIL && !self.adj[root].is_empty() {
                self.augment_from(root);
            }
        }
    }
}

pub(crate) fn greedy_mate(adj: &[Vec<usize>]) -> Vec<usize> {
    let mut mate = vec![NIL; adj.len()];
    for v in 0..adj.len() {
        if mate[v] != NIL {
            continue;
        }
        if let Some(&u) = adj[v].iter().find(|&&u| mate[u] == NIL) {
            mate[v] = u;
            mate[u] = v;
        }
    }
    mate
}

pub(crate) fn is_free(mate: &[usize], v: usize) -> bool {
    mate[v] == NIL
}
