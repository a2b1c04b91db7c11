//! Statistic evaluation and sharded enumeration shared by the identity suite
//! and the command-line front end.
//!
//! Every statistic the suite relies on is read through [`Ctx`], so a fault
//! can be planted in exactly one of them to confirm that some check notices.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use chordlab_core::matching::{self, Matching, Matchings};
use chordlab_core::perm::{
    self, PermStats, Permutation, Permutations, SignedPermutation, SignedPermutations, SignedStats,
};
use chordlab_core::stirling::{self, StirlingPermutation, StirlingPermutations};
use chordlab_core::tally::Tally;
use chordlab_core::trees::{self, PlaneTree};
use chordlab_core::words::{self, MatchingWord, WordStats};

macro_rules! stats {
    ($($variant:ident => $name:literal,)*) => {
        /// A single statistic implementation that a [`Fault`] can target.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Stat {
            $($variant,)*
        }

        impl Stat {
            pub const ALL: &'static [Stat] = &[$(Stat::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Stat::$variant => $name,)*
                }
            }
        }
    };
}

stats! {
    Fixb => "matching.fixb",
    Elblock => "matching.elblock",
    Olblock => "matching.olblock",
    Esblock => "matching.esblock",
    Osblock => "matching.osblock",
    EvenToOdd => "matching.even_to_odd",
    Cr => "matching.cr",
    Ne => "matching.ne",
    Al => "matching.al",
    Lne => "matching.lne",
    Lcr => "matching.lcr",
    Nal => "matching.nal",
    Lrp => "matching.lrp",
    Rrp => "matching.rrp",
    Trace => "matching.trace",
    Exc => "perm.exc",
    Drop => "perm.drop",
    Fix => "perm.fix",
    Cyc => "perm.cyc",
    Asc => "perm.asc",
    Des => "perm.des",
    Inv => "perm.inv",
    Cda => "perm.cda",
    Dd => "perm.dd",
    Wexc => "signed.wexc",
    ExcB => "signed.exc",
    FixB => "signed.fix",
    Single => "signed.single",
    CycB => "signed.cyc",
    WordLne => "word.lne",
    WordLcr => "word.lcr",
    WordNal => "word.nal",
    WordRrp => "word.rrp",
    WordLrp => "word.lrp",
    WordInv => "word.inv",
    WordCoinv => "word.coinv",
    WordRank => "word.rank",
    StirAsc => "stirling.asc",
    StirPlat => "stirling.plat",
    StirDes => "stirling.des",
    Leaves => "tree.leaves",
    Deg1 => "tree.deg1",
    Deg2 => "tree.deg2",
    Deg3 => "tree.deg3",
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Stat::ALL
            .iter()
            .copied()
            .find(|st| st.name() == s)
            .ok_or_else(|| format!("unknown statistic `{s}`"))
    }
}

/// A deliberately broken statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// The statistic's value has its lowest bit flipped on every object.
    Perturb(Stat),
    /// Word-level left-nestings and left-crossings are exchanged.
    SwapWordLneLcr,
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fault::Perturb(s) => write!(f, "perturb {s}"),
            Fault::SwapWordLneLcr => f.write_str("swap word.lne/word.lcr"),
        }
    }
}

/// Matching statistics in one record, trace included.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MStats {
    pub fixb: u32,
    pub elblock: u32,
    pub olblock: u32,
    pub esblock: u32,
    pub osblock: u32,
    pub even_to_odd: u32,
    pub cr: u32,
    pub ne: u32,
    pub al: u32,
    pub lne: u32,
    pub lcr: u32,
    pub nal: u32,
    pub lrp: u32,
    pub rrp: u32,
    pub trace: u32,
}

/// Stirling permutation statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QStats {
    pub asc: u32,
    pub plat: u32,
    pub des: u32,
}

#[derive(Debug, Clone)]
pub struct Ctx {
    jobs: usize,
    fault: Option<Fault>,
}

impl Default for Ctx {
    fn default() -> Self {
        Ctx::new(1)
    }
}

impl Ctx {
    pub fn new(jobs: usize) -> Self {
        Ctx {
            jobs: jobs.max(1),
            fault: None,
        }
    }

    pub fn with_fault(mut self, fault: Fault) -> Self {
        self.fault = Some(fault);
        self
    }

    pub fn jobs(&self) -> usize {
        self.jobs
    }

    pub fn fault(&self) -> Option<Fault> {
        self.fault
    }

    fn tweak(&self, stat: Stat, v: u32) -> u32 {
        if self.fault == Some(Fault::Perturb(stat)) {
            v ^ 1
        } else {
            v
        }
    }

    pub fn mstats(&self, m: &Matching) -> MStats {
        let b = matching::block_stats(m);
        let p = matching::pairwise_stats(m);
        let t = |s, v| self.tweak(s, v);
        MStats {
            fixb: t(Stat::Fixb, b.fixb),
            elblock: t(Stat::Elblock, b.elblock),
            olblock: t(Stat::Olblock, b.olblock),
            esblock: t(Stat::Esblock, b.esblock),
            osblock: t(Stat::Osblock, b.osblock),
            even_to_odd: t(Stat::EvenToOdd, b.even_to_odd),
            cr: t(Stat::Cr, p.cr),
            ne: t(Stat::Ne, p.ne),
            al: t(Stat::Al, p.al),
            lne: t(Stat::Lne, p.lne),
            lcr: t(Stat::Lcr, p.lcr),
            nal: t(Stat::Nal, p.nal),
            lrp: t(Stat::Lrp, p.lrp),
            rrp: t(Stat::Rrp, p.rrp),
            trace: t(Stat::Trace, matching::trace(m)),
        }
    }

    pub fn pstats(&self, p: &Permutation) -> PermStats {
        let s = perm::perm_stats(p);
        let t = |st, v| self.tweak(st, v);
        PermStats {
            exc: t(Stat::Exc, s.exc),
            drop: t(Stat::Drop, s.drop),
            fix: t(Stat::Fix, s.fix),
            cyc: t(Stat::Cyc, s.cyc),
            asc: t(Stat::Asc, s.asc),
            des: t(Stat::Des, s.des),
            inv: t(Stat::Inv, s.inv),
            cda: t(Stat::Cda, s.cda),
            dd: t(Stat::Dd, s.dd),
        }
    }

    pub fn sstats(&self, s: &SignedPermutation) -> SignedStats {
        let st = perm::signed_stats(s);
        let t = |k, v| self.tweak(k, v);
        SignedStats {
            wexc: t(Stat::Wexc, st.wexc),
            exc: t(Stat::ExcB, st.exc),
            fix: t(Stat::FixB, st.fix),
            single: t(Stat::Single, st.single),
            cyc: t(Stat::CycB, st.cyc),
        }
    }

    pub fn wstats(&self, w: &MatchingWord) -> WordStats {
        let s = words::word_stats(w);
        let t = |k, v| self.tweak(k, v);
        let (lne, lcr) = if self.fault == Some(Fault::SwapWordLneLcr) {
            (s.lcr, s.lne)
        } else {
            (s.lne, s.lcr)
        };
        WordStats {
            lne: t(Stat::WordLne, lne),
            lcr: t(Stat::WordLcr, lcr),
            nal: t(Stat::WordNal, s.nal),
            rrp: t(Stat::WordRrp, s.rrp),
            lrp: t(Stat::WordLrp, s.lrp),
            inv: t(Stat::WordInv, s.inv),
            coinv: t(Stat::WordCoinv, s.coinv),
            rank: t(Stat::WordRank, s.rank),
        }
    }

    pub fn qstats(&self, q: &StirlingPermutation) -> QStats {
        QStats {
            asc: self.tweak(Stat::StirAsc, stirling::stirling_asc(q)),
            plat: self.tweak(Stat::StirPlat, stirling::stirling_plat(q)),
            des: self.tweak(Stat::StirDes, stirling::stirling_des(q)),
        }
    }

    /// `[leaves, deg1, deg2, deg3]`.
    pub fn tree_hist(&self, tree: &PlaneTree) -> [u32; 4] {
        let h = tree.degree_histogram();
        [
            self.tweak(Stat::Leaves, h[0]),
            self.tweak(Stat::Deg1, h[1]),
            self.tweak(Stat::Deg2, h[2]),
            self.tweak(Stat::Deg3, h[3]),
        ]
    }

    /// Runs `work` over `[0, count)` split into rank ranges on up to `jobs`
    /// threads; results come back in range order.
    pub fn sharded<T: Send>(&self, count: u64, work: impl Fn(u64, u64) -> T + Sync) -> Vec<T> {
        let shards = if self.jobs == 1 {
            1
        } else {
            (self.jobs as u64 * 4).min(count.max(1))
        };
        let bounds: Vec<(u64, u64)> = (0..shards)
            .map(|i| (count * i / shards, count * (i + 1) / shards))
            .collect();
        if shards == 1 {
            return vec![work(0, count)];
        }
        let next = AtomicUsize::new(0);
        let slots: Vec<Mutex<Option<T>>> = bounds.iter().map(|_| Mutex::new(None)).collect();
        std::thread::scope(|scope| {
            for _ in 0..self.jobs.min(bounds.len()) {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(&(lo, hi)) = bounds.get(i) else { break };
                    let out = work(lo, hi);
                    *slots[i].lock().unwrap() = Some(out);
                });
            }
        });
        slots
            .into_iter()
            .map(|s| s.into_inner().unwrap().expect("every shard runs"))
            .collect()
    }

    /// Tallies `key` over the family, skipping objects mapped to `None`.
    pub fn tally<F: Family, const K: usize>(
        &self,
        n: usize,
        key: impl Fn(&F::Obj, &F::Stats) -> Option<[u32; K]> + Sync,
    ) -> Tally<K> {
        let parts = self.sharded(F::count(n), |lo, hi| {
            let mut t = Tally::new();
            for obj in F::from_rank(n, lo).take((hi - lo) as usize) {
                if let Some(k) = key(&obj, &F::stats(self, &obj)) {
                    t.add(k);
                }
            }
            t
        });
        let mut total = Tally::new();
        for p in &parts {
            total.merge(p);
        }
        total
    }

    /// The message for the lowest-ranked object on which `check` fails.
    pub fn first_failure<F: Family>(
        &self,
        n: usize,
        check: impl Fn(&F::Obj, &F::Stats) -> Option<String> + Sync,
    ) -> Option<String> {
        self.sharded(F::count(n), |lo, hi| {
            F::from_rank(n, lo)
                .take((hi - lo) as usize)
                .find_map(|obj| check(&obj, &F::stats(self, &obj)))
        })
        .into_iter()
        .flatten()
        .next()
    }

    /// Out-degree census of increasing plane trees, read through [`Ctx::tree_hist`].
    pub fn tree_census(&self, n: usize, max_degree: usize) -> Tally<4> {
        let mut t = Tally::new();
        trees::visit_trees(n, max_degree, |tree| t.add(self.tree_hist(tree)));
        t
    }
}

/// A rank-restartable family of combinatorial objects.
pub trait Family {
    type Obj;
    type Stats;

    fn count(n: usize) -> u64;
    fn from_rank(n: usize, rank: u64) -> Box<dyn Iterator<Item = Self::Obj>>;
    fn stats(ctx: &Ctx, obj: &Self::Obj) -> Self::Stats;
}

pub struct MatchingFamily;
pub struct WordFamily;
pub struct PermFamily;
pub struct SignedFamily;
pub struct StirlingFamily;

impl Family for MatchingFamily {
    type Obj = Matching;
    type Stats = MStats;

    fn count(n: usize) -> u64 {
        Matchings::count(n)
    }

    fn from_rank(n: usize, rank: u64) -> Box<dyn Iterator<Item = Matching>> {
        Box::new(Matchings::from_rank(n, rank))
    }

    fn stats(ctx: &Ctx, m: &Matching) -> MStats {
        ctx.mstats(m)
    }
}

/// Matching words in the order of their matchings.
impl Family for WordFamily {
    type Obj = (Matching, MatchingWord);
    type Stats = (MStats, WordStats);

    fn count(n: usize) -> u64 {
        Matchings::count(n)
    }

    fn from_rank(n: usize, rank: u64) -> Box<dyn Iterator<Item = Self::Obj>> {
        Box::new(Matchings::from_rank(n, rank).map(|m| {
            let w = MatchingWord::from_matching(&m);
            (m, w)
        }))
    }

    fn stats(ctx: &Ctx, (m, w): &Self::Obj) -> Self::Stats {
        (ctx.mstats(m), ctx.wstats(w))
    }
}

impl Family for PermFamily {
    type Obj = Permutation;
    type Stats = PermStats;

    fn count(n: usize) -> u64 {
        Permutations::count(n)
    }

    fn from_rank(n: usize, rank: u64) -> Box<dyn Iterator<Item = Permutation>> {
        Box::new(Permutations::from_rank(n, rank))
    }

    fn stats(ctx: &Ctx, p: &Permutation) -> PermStats {
        ctx.pstats(p)
    }
}

impl Family for SignedFamily {
    type Obj = SignedPermutation;
    type Stats = SignedStats;

    fn count(n: usize) -> u64 {
        SignedPermutations::count(n)
    }

    fn from_rank(n: usize, rank: u64) -> Box<dyn Iterator<Item = SignedPermutation>> {
        Box::new(SignedPermutations::from_rank(n, rank))
    }

    fn stats(ctx: &Ctx, s: &SignedPermutation) -> SignedStats {
        ctx.sstats(s)
    }
}

impl Family for StirlingFamily {
    type Obj = StirlingPermutation;
    type Stats = QStats;

    fn count(n: usize) -> u64 {
        StirlingPermutations::count(n)
    }

    fn from_rank(n: usize, rank: u64) -> Box<dyn Iterator<Item = StirlingPermutation>> {
        Box::new(StirlingPermutations::from_rank(n, rank))
    }

    fn stats(ctx: &Ctx, q: &StirlingPermutation) -> QStats {
        ctx.qstats(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shards_cover_the_range_in_order() {
        let ctx = Ctx::new(3);
        let parts = ctx.sharded(100, |lo, hi| (lo, hi));
        assert_eq!(parts.first().unwrap().0, 0);
        assert_eq!(parts.last().unwrap().1, 100);
        assert!(parts.windows(2).all(|w| w[0].1 == w[1].0));
    }

    #[test]
    fn tallies_do_not_depend_on_jobs() {
        let one = Ctx::new(1).tally::<MatchingFamily, 2>(5, |_, s| Some([s.cr, s.ne]));
        let four = Ctx::new(4).tally::<MatchingFamily, 2>(5, |_, s| Some([s.cr, s.ne]));
        assert_eq!(one, four);
        assert_eq!(one.total(), 945);
    }

    #[test]
    fn first_failure_picks_lowest_rank() {
        let hit = Ctx::new(4).first_failure::<MatchingFamily>(4, |m, s| (s.cr == 2).then(|| m.to_string()));
        let serial = Matchings::from_rank(4, 0).find(|m| matching::cr(m) == 2).unwrap();
        assert_eq!(hit, Some(serial.to_string()));
    }

    #[test]
    fn stat_names_round_trip() {
        for &s in Stat::ALL {
            assert_eq!(s.name().parse::<Stat>().unwrap(), s);
        }
    }
}
