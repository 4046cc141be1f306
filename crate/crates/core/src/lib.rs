//! Word segmentation by learning a Single Classification Ripple Down Rules
//! (SCRDR) tree that corrects the output of a longest-matching segmenter.
//!
//! ```
//! use rdrseg::{corpus, learner, lexicon::Lexicon, pipeline};
//!
//! let gold = corpus::Corpus::parse_gold("thuế_thu_nhập cá_nhân\n").unwrap();
//! let lex = Lexicon::from_words(["thuế", "thu nhập", "cá nhân"]);
//! let learned = learner::learn(&gold, &lex, &learner::LearnerConfig::with_threshold(1)).unwrap();
//!
//! let raw = corpus::parse_raw("thuế thu nhập cá nhân").unwrap();
//! let out = pipeline::segment_sentence(&raw, &lex, &learned.tree).unwrap();
//! assert_eq!(corpus::to_underscore(&out).unwrap(), "thuế_thu_nhập cá_nhân");
//! ```

pub mod context;
pub mod corpus;
pub mod error;
pub mod evaluation;
pub mod learner;
pub mod lexicon;
pub mod pipeline;
pub mod scrdr;
pub mod synthetic;

pub use corpus::{Corpus, SegTag, Syllable, TaggedSentence};
pub use error::{Error, Result};
pub use learner::{learn, LearnerConfig, Learned};
pub use lexicon::Lexicon;
pub use scrdr::ScrdrTree;
