//! Profiles (±1 sequences) and the derivation of exact factor sets for
//! skew plane partitions and cylindric partitions.

use crate::error::Error;
use crate::series::FactorSet;
use crate::Result;

/// A finite nonempty sequence over {+1, -1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    steps: Vec<i8>,
}

impl Profile {
    pub fn new(steps: Vec<i8>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::ProfileParse {
                position: 1,
                message: "empty profile".into(),
            });
        }
        for (i, &s) in steps.iter().enumerate() {
            if s != 1 && s != -1 {
                return Err(Error::ProfileParse {
                    position: i + 1,
                    message: format!("entry {s} is not +1 or -1"),
                });
            }
        }
        Ok(Self { steps })
    }

    /// Parse either the canonical `+`/`-` form or comma-separated
    /// `1,-1` integers. Positions in errors are 1-based.
    pub fn parse(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::ProfileParse {
                position: 1,
                message: "empty profile string".into(),
            });
        }
        if text.contains(',') || text.chars().any(|c| c.is_ascii_digit()) {
            let mut steps = Vec::new();
            for (i, token) in text.split(',').enumerate() {
                match token.trim() {
                    "1" | "+1" => steps.push(1),
                    "-1" => steps.push(-1),
                    other => {
                        return Err(Error::ProfileParse {
                            position: i + 1,
                            message: format!("token {other:?} is not 1 or -1"),
                        })
                    }
                }
            }
            Self::new(steps)
        } else {
            let mut steps = Vec::new();
            for (i, c) in text.chars().enumerate() {
                match c {
                    '+' => steps.push(1),
                    '-' => steps.push(-1),
                    other => {
                        return Err(Error::ProfileParse {
                            position: i + 1,
                            message: format!("character {other:?} is not '+' or '-'"),
                        })
                    }
                }
            }
            Self::new(steps)
        }
    }

    pub fn steps(&self) -> &[i8] {
        &self.steps
    }

    /// Length h of the profile.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of +1 letters.
    pub fn ones(&self) -> usize {
        self.steps.iter().filter(|&&s| s == 1).count()
    }

    /// Number of -1 letters.
    pub fn minus_ones(&self) -> usize {
        self.steps.iter().filter(|&&s| s == -1).count()
    }
}

impl std::fmt::Display for Profile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &s in &self.steps {
            f.write_str(if s == 1 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

/// A skew profile: a finite head followed by an implied infinite tail
/// of -1 steps. The head may be empty (the all-minus profile).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewProfile {
    head: Vec<i8>,
}

impl SkewProfile {
    pub fn new(head: Vec<i8>) -> Result<Self> {
        for (i, &s) in head.iter().enumerate() {
            if s != 1 && s != -1 {
                return Err(Error::ProfileParse {
                    position: i + 1,
                    message: format!("entry {s} is not +1 or -1"),
                });
            }
        }
        Ok(Self { head })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(Self {
            head: Profile::parse(text)?.steps,
        })
    }

    pub fn from_profile(head: Profile) -> Self {
        Self { head: head.steps }
    }

    pub fn head(&self) -> &[i8] {
        &self.head
    }

    /// Number of +1 steps in the head.
    pub fn ell(&self) -> usize {
        self.head.iter().filter(|&&s| s == 1).count()
    }

    /// Width m = length of the head plus one.
    pub fn width(&self) -> usize {
        self.head.len() + 1
    }

    /// Number of head pairs i < j with head[i] > head[j].
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.head.len() {
            for j in i + 1..self.head.len() {
                if self.head[i] > self.head[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

/// The multiset of residues appearing as exponents in the cylindric
/// product for a given profile; all members lie in [1, h].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylindricWindow {
    modulus: u64,
    members: Vec<u64>,
}

impl CylindricWindow {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Sorted multiset of members.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn sum(&self) -> u64 {
        self.members.iter().sum()
    }
}

/// Factor set for skew plane partitions: one geometric factor per
/// inversion pair of the full profile (head followed by the -1 tail),
/// truncated to moduli `<= limit`. Tail positions contribute one pair
/// per +1 head step and tail distance.
pub fn skew_inversion_factors(profile: &SkewProfile, limit: usize) -> FactorSet {
    let head = profile.head();
    let m = profile.width() as u64;
    let mut set = FactorSet::new();
    // Head-head inversions.
    for i in 0..head.len() {
        for j in i + 1..head.len() {
            if head[i] > head[j] {
                let modulus = (j - i) as u64;
                if modulus <= limit as u64 {
                    set.push_geometric(modulus, 1);
                }
            }
        }
    }
    // Head +1 against every tail -1 at distance m-i, m-i+1, ...
    for (i0, &s) in head.iter().enumerate() {
        if s == 1 {
            let i = (i0 + 1) as u64;
            let mut modulus = m - i;
            while modulus <= limit as u64 {
                set.push_geometric(modulus, 1);
                modulus += 1;
            }
        }
    }
    set
}

/// Factor set for skew plane partitions in decomposed form: the finite
/// head inversions as geometric factors plus one progression factor
/// `(1, m-i)` per +1 step at head position i.
pub fn skew_decomposed_factors(profile: &SkewProfile) -> FactorSet {
    let head = profile.head();
    let m = profile.width() as u64;
    let mut set = FactorSet::new();
    for i in 0..head.len() {
        for j in i + 1..head.len() {
            if head[i] > head[j] {
                set.push_geometric((j - i) as u64, 1);
            }
        }
    }
    for (i0, &s) in head.iter().enumerate() {
        if s == 1 {
            let i = (i0 + 1) as u64;
            set.push_progression(1, m - i, 1);
        }
    }
    set
}

/// The window multiset for a cylindric profile:
/// `{h} ⊎ {j-i : i<j, δ_i>δ_j} ⊎ {h+i-j : i<j, δ_i<δ_j}`.
pub fn cylindric_window(profile: &Profile) -> CylindricWindow {
    let steps = profile.steps();
    let h = profile.len() as u64;
    let mut members = vec![h];
    for i in 0..steps.len() {
        for j in i + 1..steps.len() {
            if steps[i] > steps[j] {
                members.push((j - i) as u64);
            } else if steps[i] < steps[j] {
                members.push(h + i as u64 - j as u64);
            }
        }
    }
    members.sort_unstable();
    CylindricWindow {
        modulus: h,
        members,
    }
}

/// Factor set for cylindric partitions: one progression `(h, t)` per
/// window member t, with the member's multiplicity.
pub fn cp_factor_set(profile: &Profile) -> FactorSet {
    let window = cylindric_window(profile);
    let mut set = FactorSet::new();
    for &t in window.members() {
        set.push_progression(window.modulus(), t, 1);
    }
    set
}
