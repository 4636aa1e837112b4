//! Run configuration: algorithm selection, validation, and the plain-text
//! `key=value` config file that mirrors the CLI flags.

use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use jumpflood::Error as CoreError;

#[derive(Debug)]
pub enum BenchError {
    Core(CoreError),
    Config(String),
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl fmt::Display for BenchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BenchError::Core(e) => write!(f, "{e}"),
            BenchError::Config(msg) => write!(f, "invalid configuration: {msg}"),
            BenchError::Io { path, source } => {
                write!(f, "i/o error on {}: {source}", path.display())
            }
        }
    }
}

impl std::error::Error for BenchError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            BenchError::Core(e) => Some(e),
            BenchError::Io { source, .. } => Some(source),
            BenchError::Config(_) => None,
        }
    }
}

impl From<CoreError> for BenchError {
    fn from(e: CoreError) -> Self {
        BenchError::Core(e)
    }
}

/// The diagram builders the harness can run side by side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    /// Jump flooding from scratch every step (the baseline).
    Jfa,
    /// Dynamic jump flooding, Euclidean distance.
    DjfaEuclidean,
    /// Dynamic jump flooding, Manhattan distance.
    DjfaManhattan,
    /// Standard flooding from scratch every step.
    Stf,
    /// Brute-force nearest-seed scan every step.
    Exact,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Jfa,
        Algorithm::DjfaEuclidean,
        Algorithm::DjfaManhattan,
        Algorithm::Stf,
        Algorithm::Exact,
    ];

    /// The stable tag used in CSV output and CLI parsing.
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Jfa => "jfa",
            Algorithm::DjfaEuclidean => "djfa-euclidean",
            Algorithm::DjfaManhattan => "djfa-manhattan",
            Algorithm::Stf => "stf",
            Algorithm::Exact => "exact",
        }
    }

    pub fn metric(self) -> jumpflood::DistanceMetric {
        match self {
            Algorithm::DjfaManhattan => jumpflood::DistanceMetric::Manhattan,
            _ => jumpflood::DistanceMetric::Euclidean,
        }
    }

    /// Dynamic variants reuse their previous grid instead of rebuilding.
    pub fn is_dynamic(self) -> bool {
        matches!(self, Algorithm::DjfaEuclidean | Algorithm::DjfaManhattan)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = Algorithm::ALL.iter().map(|a| a.name()).collect();
                format!("unknown algorithm '{s}' (known: {})", known.join(", "))
            })
    }
}

pub const DEFAULT_STEPS: u32 = 100;
pub const DEFAULT_RNG_SEED: u64 = 42;
pub const DEFAULT_FRAME_EVERY: u32 = 10;

/// Everything one simulation run needs.
#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    /// Grid side in pixels.
    pub n: u32,
    /// Seed count.
    pub s: u32,
    /// Simulation steps.
    pub steps: u32,
    /// Maximum per-axis displacement per step, in pixels.
    pub d_max: u32,
    pub rng_seed: u64,
    pub algorithms: Vec<Algorithm>,
    /// Jump-1 repair rounds for the flooding builders (0-2).
    pub extra_rounds: u8,
    /// Von Neumann opening waves for the dynamic builders (0-2).
    pub vn_phase_waves: u8,
    /// Per-step records are written here after the run (and flushed with
    /// whatever was recorded if the run aborts).
    pub csv_path: Option<PathBuf>,
    /// Directory for PPM frame dumps, one image per algorithm every
    /// `frame_every` steps.
    pub frames_dir: Option<PathBuf>,
    pub frame_every: u32,
}

impl SimConfig {
    /// A config with the default policies: 100 steps, the three benchmark
    /// algorithms, one repair round, two Von Neumann opening waves, no
    /// file output.
    pub fn new(n: u32, s: u32, d_max: u32, rng_seed: u64) -> Self {
        Self {
            n,
            s,
            steps: DEFAULT_STEPS,
            d_max,
            rng_seed,
            algorithms: vec![
                Algorithm::Jfa,
                Algorithm::DjfaEuclidean,
                Algorithm::DjfaManhattan,
            ],
            extra_rounds: jumpflood::flooding::DEFAULT_EXTRA_ROUNDS,
            vn_phase_waves: jumpflood::djfa::DEFAULT_VN_PHASE_WAVES,
            csv_path: None,
            frames_dir: None,
            frame_every: DEFAULT_FRAME_EVERY,
        }
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        let fail = |msg: String| Err(BenchError::Config(msg));
        if self.n < 2 {
            return fail(format!("grid side must be at least 2 (got {})", self.n));
        }
        if self.s < 1 {
            return fail("seed count must be at least 1".into());
        }
        if self.s as u64 > (self.n as u64) * (self.n as u64) {
            return fail(format!(
                "{} seeds exceed the {}x{} grid",
                self.s, self.n, self.n
            ));
        }
        if self.steps < 1 {
            return fail("step count must be at least 1".into());
        }
        if self.algorithms.is_empty() {
            return fail("at least one algorithm is required".into());
        }
        let mut sorted = self.algorithms.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != self.algorithms.len() {
            return fail("duplicate algorithm in the algorithm list".into());
        }
        if self.algorithms.iter().any(|a| a.is_dynamic()) && self.d_max < 1 {
            return fail("dynamic algorithms need d_max >= 1".into());
        }
        if self.extra_rounds > 2 {
            return fail(format!(
                "extra rounds must be 0-2 (got {})",
                self.extra_rounds
            ));
        }
        if self.vn_phase_waves > 2 {
            return fail(format!(
                "vn waves must be 0-2 (got {})",
                self.vn_phase_waves
            ));
        }
        if self.frame_every < 1 {
            return fail("frame-every must be at least 1".into());
        }
        Ok(())
    }
}

/// A partial configuration: what a config file or a set of CLI flags
/// provides. Later overlays win field by field.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigOverlay {
    pub n: Option<u32>,
    pub s: Option<u32>,
    pub steps: Option<u32>,
    pub d_max: Option<u32>,
    pub rng_seed: Option<u64>,
    pub algorithms: Option<Vec<Algorithm>>,
    pub extra_rounds: Option<u8>,
    pub vn_phase_waves: Option<u8>,
    pub csv_path: Option<PathBuf>,
    pub frames_dir: Option<PathBuf>,
    pub frame_every: Option<u32>,
}

impl ConfigOverlay {
    /// Parses the `key=value` file format. Keys match the long CLI flags;
    /// blank lines and `#` comments are ignored.
    pub fn from_file(path: &Path) -> Result<Self, BenchError> {
        let text = std::fs::read_to_string(path).map_err(|source| BenchError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let mut pairs = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                BenchError::Config(format!(
                    "{}:{}: expected key=value, got '{line}'",
                    path.display(),
                    lineno + 1
                ))
            })?;
            pairs.insert(key.trim().to_string(), value.trim().to_string());
        }
        Self::from_pairs(pairs)
    }

    fn from_pairs(mut pairs: HashMap<String, String>) -> Result<Self, BenchError> {
        fn parse<T: FromStr>(
            pairs: &mut HashMap<String, String>,
            key: &str,
        ) -> Result<Option<T>, BenchError>
        where
            T::Err: fmt::Display,
        {
            match pairs.remove(key) {
                None => Ok(None),
                Some(raw) => raw
                    .parse()
                    .map(Some)
                    .map_err(|e| BenchError::Config(format!("key '{key}': {e}"))),
            }
        }

        let overlay = Self {
            n: parse(&mut pairs, "n")?,
            s: parse(&mut pairs, "seeds")?,
            steps: parse(&mut pairs, "steps")?,
            d_max: parse(&mut pairs, "dmax")?,
            rng_seed: parse(&mut pairs, "rng-seed")?,
            algorithms: match pairs.remove("algorithms") {
                None => None,
                Some(raw) => Some(parse_algorithm_list(&raw)?),
            },
            extra_rounds: parse(&mut pairs, "extra-rounds")?,
            vn_phase_waves: parse(&mut pairs, "vn-waves")?,
            csv_path: pairs.remove("csv").map(PathBuf::from),
            frames_dir: pairs.remove("frames").map(PathBuf::from),
            frame_every: parse(&mut pairs, "frame-every")?,
        };
        if let Some(unknown) = pairs.keys().next() {
            return Err(BenchError::Config(format!(
                "unknown config key '{unknown}'"
            )));
        }
        Ok(overlay)
    }

    /// Field-wise merge where `self` wins over `base`.
    pub fn over(self, base: ConfigOverlay) -> ConfigOverlay {
        ConfigOverlay {
            n: self.n.or(base.n),
            s: self.s.or(base.s),
            steps: self.steps.or(base.steps),
            d_max: self.d_max.or(base.d_max),
            rng_seed: self.rng_seed.or(base.rng_seed),
            algorithms: self.algorithms.or(base.algorithms),
            extra_rounds: self.extra_rounds.or(base.extra_rounds),
            vn_phase_waves: self.vn_phase_waves.or(base.vn_phase_waves),
            csv_path: self.csv_path.or(base.csv_path),
            frames_dir: self.frames_dir.or(base.frames_dir),
            frame_every: self.frame_every.or(base.frame_every),
        }
    }

    /// Resolves into a validated [`SimConfig`]. `n`, `seeds` and `dmax`
    /// must be present somewhere in the overlay chain; everything else has
    /// a default.
    pub fn into_config(self) -> Result<SimConfig, BenchError> {
        let n = self
            .n
            .ok_or_else(|| BenchError::Config("missing --n".into()))?;
        let s = self
            .s
            .ok_or_else(|| BenchError::Config("missing --seeds".into()))?;
        let d_max = self
            .d_max
            .ok_or_else(|| BenchError::Config("missing --dmax".into()))?;
        let mut cfg = SimConfig::new(n, s, d_max, self.rng_seed.unwrap_or(DEFAULT_RNG_SEED));
        if let Some(steps) = self.steps {
            cfg.steps = steps;
        }
        if let Some(algorithms) = self.algorithms {
            cfg.algorithms = algorithms;
        }
        if let Some(extra) = self.extra_rounds {
            cfg.extra_rounds = extra;
        }
        if let Some(vn) = self.vn_phase_waves {
            cfg.vn_phase_waves = vn;
        }
        cfg.csv_path = self.csv_path;
        cfg.frames_dir = self.frames_dir;
        if let Some(every) = self.frame_every {
            cfg.frame_every = every;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

pub fn parse_algorithm_list(raw: &str) -> Result<Vec<Algorithm>, BenchError> {
    raw.split(',')
        .map(str::trim)
        .filter(|part| !part.is_empty())
        .map(|part| part.parse().map_err(BenchError::Config))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algorithm_names_round_trip() {
        for alg in Algorithm::ALL {
            assert_eq!(alg.name().parse::<Algorithm>().unwrap(), alg);
        }
        assert!("jfa2".parse::<Algorithm>().is_err());
    }

    #[test]
    fn validation_catches_bad_configs() {
        assert!(SimConfig::new(64, 16, 2, 1).validate().is_ok());
        assert!(SimConfig::new(1, 1, 2, 1).validate().is_err());
        assert!(SimConfig::new(4, 17, 2, 1).validate().is_err());
        let mut cfg = SimConfig::new(64, 16, 0, 1);
        assert!(cfg.validate().is_err()); // dynamic algorithms need d_max >= 1
        cfg.algorithms = vec![Algorithm::Jfa];
        assert!(cfg.validate().is_ok());
        cfg.algorithms = vec![Algorithm::Jfa, Algorithm::Jfa];
        assert!(cfg.validate().is_err());
        cfg.algorithms = vec![];
        assert!(cfg.validate().is_err());
        let mut cfg = SimConfig::new(64, 16, 2, 1);
        cfg.extra_rounds = 3;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn overlay_precedence() {
        let file = ConfigOverlay {
            n: Some(128),
            s: Some(32),
            d_max: Some(4),
            steps: Some(7),
            ..Default::default()
        };
        let flags = ConfigOverlay {
            n: Some(256),
            ..Default::default()
        };
        let cfg = flags.over(file).into_config().unwrap();
        assert_eq!(cfg.n, 256); // flag wins
        assert_eq!(cfg.s, 32); // file fills the gap
        assert_eq!(cfg.steps, 7);
        assert_eq!(cfg.rng_seed, DEFAULT_RNG_SEED);
    }

    #[test]
    fn missing_required_keys_are_reported() {
        let err = ConfigOverlay::default().into_config().unwrap_err();
        assert!(err.to_string().contains("--n"));
    }

    #[test]
    fn algorithm_list_parsing() {
        let list = parse_algorithm_list("jfa, djfa-manhattan").unwrap();
        assert_eq!(list, vec![Algorithm::Jfa, Algorithm::DjfaManhattan]);
        assert!(parse_algorithm_list("jfa,bogus").is_err());
    }
}
