//! Boundary Fiduccia–Mattheyses refinement shared by both level kinds.

use super::Level;
use crate::graph::Weight;

/// Incremental move gains for one partition of one level.
pub(crate) trait GainTracker {
    /// Cut reduction if `v` switched blocks.
    fn gain(&self, v: usize) -> Weight;

    /// Current cut, maintained incrementally.
    fn cut(&self) -> Weight;

    /// True if `v` is incident to a cut edge or net.
    fn is_boundary(&self, v: usize) -> bool;

    /// Moves `v` to the other block, updating `block` and the gains of
    /// affected nodes. Nodes whose gain may have changed are appended to
    /// `touched`.
    fn apply(&mut self, v: usize, block: &mut [u8], touched: &mut Vec<usize>);
}

/// Moves without a new best prefix before a pass gives up.
const STALL_LIMIT: usize = 50;

/// Total block weight above `l_max`.
pub(crate) fn overload<L: Level>(level: &L, block: &[u8], l_max: Weight) -> Weight {
    let w = block_weights(level, block);
    (w[0] - l_max).max(0) + (w[1] - l_max).max(0)
}

fn block_weights<L: Level>(level: &L, block: &[u8]) -> [Weight; 2] {
    let mut w = [0; 2];
    for (v, &b) in block.iter().enumerate() {
        w[b as usize] += level.node_weight(v);
    }
    w
}

struct Balance {
    weight: [Weight; 2],
    count: [usize; 2],
    l_max: Weight,
}

impl Balance {
    fn new<L: Level>(level: &L, block: &[u8], l_max: Weight) -> Self {
        let mut count = [0; 2];
        for &b in block {
            count[b as usize] += 1;
        }
        Balance {
            weight: block_weights(level, block),
            count,
            l_max,
        }
    }

    fn overload(&self) -> Weight {
        (self.weight[0] - self.l_max).max(0) + (self.weight[1] - self.l_max).max(0)
    }

    /// A move out of `from` keeps `from` nonempty and either fits the target
    /// or moves weight away from an overloaded block towards a lighter one.
    fn allows(&self, from: usize, w: Weight) -> bool {
        let to = 1 - from;
        if self.count[from] <= 1 {
            return false;
        }
        let target = self.weight[to] + w;
        target <= self.l_max || (self.weight[from] > self.l_max && target < self.weight[from])
    }

    fn shift(&mut self, from: usize, w: Weight) {
        self.weight[from] -= w;
        self.weight[1 - from] += w;
        self.count[from] -= 1;
        self.count[1 - from] += 1;
    }
}

/// Max-heap over nodes keyed by gain, ties to the smaller node ID, with
/// in-place key updates.
struct GainHeap {
    items: Vec<(Weight, usize)>,
    pos: Vec<usize>,
}

impl GainHeap {
    const ABSENT: usize = usize::MAX;

    fn new(n: usize) -> Self {
        GainHeap {
            items: Vec::new(),
            pos: vec![Self::ABSENT; n],
        }
    }

    fn clear(&mut self) {
        for &(_, v) in &self.items {
            self.pos[v] = Self::ABSENT;
        }
        self.items.clear();
    }

    fn above(a: (Weight, usize), b: (Weight, usize)) -> bool {
        a.0 > b.0 || (a.0 == b.0 && a.1 < b.1)
    }

    fn peek(&self) -> Option<(Weight, usize)> {
        self.items.first().copied()
    }

    fn set(&mut self, v: usize, gain: Weight) {
        let i = match self.pos[v] {
            Self::ABSENT => {
                self.items.push((gain, v));
                self.items.len() - 1
            }
            i => {
                self.items[i].0 = gain;
                i
            }
        };
        self.pos[v] = i;
        let i = self.sift_up(i);
        self.sift_down(i);
    }

    fn remove(&mut self, v: usize) {
        let i = self.pos[v];
        if i == Self::ABSENT {
            return;
        }
        self.pos[v] = Self::ABSENT;
        let last = self.items.pop().expect("nonempty");
        if i < self.items.len() {
            self.items[i] = last;
            self.pos[last.1] = i;
            let i = self.sift_up(i);
            self.sift_down(i);
        }
    }

    fn swap(&mut self, i: usize, j: usize) {
        self.items.swap(i, j);
        self.pos[self.items[i].1] = i;
        self.pos[self.items[j].1] = j;
    }

    fn sift_up(&mut self, mut i: usize) -> usize {
        while i > 0 {
            let parent = (i - 1) / 2;
            if !Self::above(self.items[i], self.items[parent]) {
                break;
            }
            self.swap(i, parent);
            i = parent;
        }
        i
    }

    fn sift_down(&mut self, mut i: usize) {
        loop {
            let (l, r) = (2 * i + 1, 2 * i + 2);
            let mut top = i;
            if l < self.items.len() && Self::above(self.items[l], self.items[top]) {
                top = l;
            }
            if r < self.items.len() && Self::above(self.items[r], self.items[top]) {
                top = r;
            }
            if top == i {
                return;
            }
            self.swap(i, top);
            i = top;
        }
    }
}

struct Scratch {
    heaps: [GainHeap; 2],
    locked: Vec<bool>,
    moves: Vec<usize>,
    touched: Vec<usize>,
}

/// Runs up to `max_passes` FM passes. Each pass moves unlocked nodes in
/// order of decreasing gain, then rolls back to the best prefix, where
/// "best" means least overload first and lowest cut second. Returns the
/// final cut.
pub(crate) fn fm_refine<L: Level>(
    level: &L,
    block: &mut [u8],
    l_max: Weight,
    max_passes: usize,
) -> Weight {
    let n = level.n();
    let mut gains = level.gains(block);
    let mut scratch = Scratch {
        heaps: [GainHeap::new(n), GainHeap::new(n)],
        locked: vec![false; n],
        moves: Vec::new(),
        touched: Vec::new(),
    };
    for _ in 0..max_passes {
        if !fm_pass(level, &mut gains, block, l_max, &mut scratch) {
            break;
        }
    }
    debug_assert_eq!(gains.cut(), level.cut(block));
    gains.cut()
}

fn fm_pass<L: Level>(
    level: &L,
    gains: &mut L::Gains<'_>,
    block: &mut [u8],
    l_max: Weight,
    scratch: &mut Scratch,
) -> bool {
    let n = level.n();
    let Scratch {
        heaps,
        locked,
        moves,
        touched,
    } = scratch;
    let mut balance = Balance::new(level, block, l_max);
    // Interior nodes only matter while some block is overloaded.
    let all = balance.overload() > 0;
    for v in 0..n {
        if all || gains.is_boundary(v) {
            heaps[block[v] as usize].set(v, gains.gain(v));
        }
    }
    locked.fill(false);
    moves.clear();

    let initial = (balance.overload(), gains.cut());
    let mut best = initial;
    let mut best_len = 0;

    while moves.len() - best_len <= STALL_LIMIT {
        let mut candidates: [Option<(Weight, usize)>; 2] = [None, None];
        for b in 0..2 {
            while let Some((g, v)) = heaps[b].peek() {
                if balance.allows(b, level.node_weight(v)) {
                    candidates[b] = Some((g, v));
                    break;
                }
                // Blocked for now; it returns if a neighbor move changes its gain.
                heaps[b].remove(v);
            }
        }
        let pick = match candidates {
            [Some((g0, v0)), Some((g1, v1))] => {
                if g0 > g1 || (g0 == g1 && balance.weight[0] >= balance.weight[1]) {
                    v0
                } else {
                    v1
                }
            }
            [Some((_, v)), None] | [None, Some((_, v))] => v,
            [None, None] => break,
        };
        let from = block[pick] as usize;
        heaps[from].remove(pick);
        touched.clear();
        gains.apply(pick, block, touched);
        balance.shift(from, level.node_weight(pick));
        locked[pick] = true;
        moves.push(pick);
        for &x in touched.iter() {
            if !locked[x] {
                heaps[block[x] as usize].set(x, gains.gain(x));
            }
        }
        let key = (balance.overload(), gains.cut());
        if key < best {
            best = key;
            best_len = moves.len();
        }
    }
    heaps[0].clear();
    heaps[1].clear();

    for &v in moves[best_len..].iter().rev() {
        touched.clear();
        gains.apply(v, block, touched);
    }
    best < initial
}

/// Applies strictly improving feasible single-node moves until none is left.
pub(crate) fn hill_climb<L: Level>(level: &L, block: &mut [u8], l_max: Weight) -> Weight {
    let mut gains = level.gains(block);
    let mut balance = Balance::new(level, block, l_max);
    let mut touched = Vec::new();
    loop {
        let mut moved = false;
        for v in 0..level.n() {
            let from = block[v] as usize;
            let w = level.node_weight(v);
            if gains.gain(v) > 0 && balance.allows(from, w) && balance.weight[1 - from] + w <= l_max {
                touched.clear();
                gains.apply(v, block, &mut touched);
                balance.shift(from, w);
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    gains.cut()
}
