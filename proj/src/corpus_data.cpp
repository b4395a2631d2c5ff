#include "corpus_raw.hpp"

// Separation-witness library: 50 plurality + 46 veto + 32 approval
// elections, stored in the canonical election file format.

namespace ectk::detail {

const RawRecord kWitnessLibrary[] = {
    {"Plur.1", false,
     "system: plurality\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "b>a>c\n"
     "c>a>b\n"},
    {"Plur.2", false,
     "system: plurality\n"
     "candidates: a b\n"
     "votes:\n"
     "a>b\n"
     "b>a\n"},
    {"Plur.3", false,
     "system: plurality\n"
     "candidates: a b\n"
     "votes:\n"
     "a>b\n"},
    {"Plur.4", true,
     "system: plurality\n"
     "candidates: a b c d\n"
     "votes:\n"
     "b>c>d>a\n"
     "d>a>c>b\n"
     "b>c>d>a\n"
     "a>c>b>d\n"
     "a>b>d>c\n"
     "d>a>b>c\n"
     "c>d>b>a\n"
     "d>a>c>b\n"
     "a>c>b>d\n"
     "d>c>b>a\n"
     "b>c>d>a\n"
     "a>b>d>c\n"
     "d>b>c>a\n"
     "a>d>c>b\n"
     "b>c>d>a\n"
     "c>a>b>d\n"
     "b>a>d>c\n"
     "a>c>d>b\n"},
    {"Plur.5", false,
     "system: plurality\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "a>b>c\n"
     "a>c>b\n"
     "a>c>b\n"
     "b>a>c\n"
     "b>a>c\n"
     "b>a>c\n"
     "c>a>b\n"
     "c>a>b\n"
     "c>a>b\n"},
    {"Plur.6", false,
     "system: plurality\n"
     "candidates: a b c\n"
     "votes:\n"
     "b>c>a\n"
     "c>b>a\n"},
    {"Plur.7", false,
     "system: plurality\n"
     "candidates: a b c d\n"
     "votes:\n"
     "a>b>c>d\n"
     "c>d>a>b\n"
     "d>b>a>c\n"},
    {"Plur.8", false,
     "system: plurality\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "a>b>c\n"
     "b>a>c\n"
     "b>a>c\n"
     "c>b>a\n"},
    {"Plur.9", false,
     "system: plurality\n"
     "candidates: a b c d\n"
     "votes:\n"
     "a>b>c>d\n"
     "a>b>c>d\n"
     "a>b>c>d\n"
     "b>a>c>d\n"
     "c>b>a>d\n"
     "d>b>a>c\n"},
    {"Plur.10", false,
     "system: plurality\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "a>b>c\n"
     "b>a>c\n"
     "c>a>b\n"},
    {"Plur.11", false,
     "system: plurality\n"
     "candidates: a b c d e\n"
     "votes:\n"
     "c>b>a>d>e\n"
     "c>d>e>a>b\n"
     "a>d>b>c>e\n"
     "c>d>b>e>a\n"
     "c>b>e>d>a\n"
     "d>e>b>c>a\n"
     "d>b>e>c>a\n"
     "a>b>d>e>c\n"
     "e>c>b>d>a\n"
     "c>a>b>d>e\n"
     "b>e>a>c>d\n"
     "a>d>b>e>c\n"
     "d>a>c>e>b\n"
     "a>b>c>e>d\n"
     "c>d>e>b>a\n"
     "e>d>c>a>b\n"
     "e>d>a>b>c\n"},
    {"Plur.12", false,
     "system: plurality\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "a>c>b\n"
     "b>a>c\n"
     "c>a>b\n"},
    {"Plur.13", false,
     "system: plurality\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "a>c>b\n"
     "b>c>a\n"
     "c>b>a\n"},
    {"Plur.14", false,
     "system: plurality\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "a>c>b\n"
     "b>c>a\n"
     "b>c>a\n"
     "b>c>a\n"
     "c>b>a\n"
     "c>b>a\n"
     "c>b>a\n"},
    {"Plur.15", false,
     "system: plurality\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "a>c>b\n"
     "b>a>c\n"
     "b>c>a\n"
     "c>b>a\n"},
    {"Plur.16", false,
     "system: plurality\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "a>c>b\n"
     "b>a>c\n"
     "b>c>a\n"
     "c>a>b\n"},
    {"Plur.17", false,
     "system: plurality\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "a>c>b\n"
     "b>a>c\n"
     "b>c>a\n"
     "c>a>b\n"
     "c>b>a\n"},
    {"Plur.18", false,
     "system: plurality\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "b>c>a\n"
     "b>c>a\n"
     "c>b>a\n"
     "c>b>a\n"
     "c>b>a\n"},
    {"Plur.19", false,
     "system: plurality\n"
     "candidates: a b c d\n"
     "votes:\n"
     "a>b>c>d\n"
     "a>b>c>d\n"
     "a>b>c>d\n"
     "b>a>c>d\n"
     "c>b>a>d\n"
     "d>b>a>c\n"},
    {"Plur.20", false,
     "system: plurality\n"
     "candidates: a b c d\n"
     "votes:\n"
     "a>c>b>d\n"
     "b>a>c>d\n"
     "b>a>c>d\n"
     "c>b>a>d\n"
     "d>c>b>a\n"},
    {"Plur.21", false,
     "system: plurality\n"
     "candidates: a b c d\n"
     "votes:\n"
     "a>b>c>d\n"
     "a>b>c>d\n"
     "b>c>a>d\n"
     "b>c>a>d\n"
     "c>d>b>a\n"},
    {"Plur.22", false,
     "system: plurality\n"
     "candidates: a b c d\n"
     "votes:\n"
     "a>b>c>d\n"
     "a>b>c>d\n"
     "a>b>c>d\n"
     "b>c>d>a\n"
     "c>b>d>a\n"
     "d>a>c>b\n"
     "d>b>c>a\n"
     "d>b>c>a\n"},
    {"Plur.23", false,
     "system: plurality\n"
     "candidates: a b c\n"
     "votes:\n"
     "b>a>c\n"
     "b>a>c\n"
     "b>a>c\n"
     "b>a>c\n"
     "b>a>c\n"
     "b>a>c\n"
     "a>b>c\n"
     "a>b>c\n"
     "a>b>c\n"
     "a>b>c\n"
     "a>b>c\n"
     "c>b>a\n"
     "c>b>a\n"
     "c>b>a\n"},
    {"Plur.24", false,
     "system: plurality\n"
     "candidates: a b c d\n"
     "votes:\n"
     "b>a>d>c\n"
     "b>a>d>c\n"
     "b>a>d>c\n"
     "b>a>d>c\n"
     "b>a>d>c\n"
     "c>a>b>d\n"
     "c>a>b>d\n"
     "c>a>b>d\n"
     "c>a>b>d\n"
     "d>a>b>c\n"
     "d>a>b>c\n"},
    {"Plur.25", true,
     "system: plurality\n"
     "candidates: a b c d e f\n"
     "votes:\n"
     "d>e>b>f>c>a\n"
     "b>f>c>a>e>d\n"
     "b>e>c>a>d>f\n"
     "f>e>a>b>d>c\n"
     "b>a>e>d>f>c\n"
     "a>c>d>e>b>f\n"
     "c>e>f>b>a>d\n"},
    {"Plur.26", true,
     "system: plurality\n"
     "candidates: a b c d e f g\n"
     "votes:\n"
     "c>d>g>f>b>e>a\n"
     "a>f>b>c>d>g>e\n"
     "g>c>a>d>e>b>f\n"
     "a>g>f>d>e>b>c\n"
     "e>g>a>d>b>c>f\n"
     "d>f>e>a>g>c>b\n"
     "f>a>d>g>e>c>b\n"
     "b>g>a>c>f>d>e\n"
     "a>c>g>b>f>d>e\n"},
    {"Plur.27", false,
     "system: plurality\n"
     "candidates: a b\n"
     "spoiler-candidates: c\n"
     "k: 1\n"
     "votes:\n"
     "c>b>a\n"},
    {"Plur.28", false,
     "system: plurality\n"
     "candidates: a b\n"
     "k: 1\n"
     "votes:\n"
     "a>b\n"
     "spoiler-votes:\n"
     "a>b\n"},
    {"Plur.29", false,
     "system: plurality\n"
     "candidates: a b\n"
     "spoiler-candidates: c\n"
     "k: 1\n"
     "votes:\n"
     "a>c>b\n"},
    {"Plur.30", false,
     "system: plurality\n"
     "candidates: a b\n"
     "k: 0\n"
     "votes:\n"
     "a>b\n"
     "a>b\n"},
    {"Plur.31", false,
     "system: plurality\n"
     "candidates: a b c d\n"
     "k: 2\n"
     "votes:\n"
     "b>c>d>a\n"
     "b>c>d>a\n"
     "a>b>c>d\n"},
    {"Plur.32", false,
     "system: plurality\n"
     "candidates: a b c d\n"
     "k: 2\n"
     "votes:\n"
     "a>b>c>d\n"
     "a>b>c>d\n"
     "a>b>c>d\n"
     "a>b>c>d\n"
     "a>b>c>d\n"
     "a>b>c>d\n"
     "b>c>d>a\n"
     "b>c>d>a\n"
     "b>c>d>a\n"
     "c>b>d>a\n"
     "c>b>d>a\n"
     "c>b>d>a\n"
     "d>b>c>a\n"
     "d>b>c>a\n"
     "d>b>c>a\n"},
    {"Plur.33", false,
     "system: plurality\n"
     "candidates: a\n"
     "spoiler-candidates:\n"
     "k: 0\n"
     "votes:\n"
     "a\n"},
    {"Plur.34", false,
     "system: plurality\n"
     "candidates: a\n"
     "k: 0\n"
     "votes:\n"
     "a\n"},
    {"Plur.35", false,
     "system: plurality\n"
     "candidates: a\n"
     "k: 0\n"
     "votes:\n"
     "a\n"
     "spoiler-votes:\n"},
    {"Plur.36", false,
     "system: plurality\n"
     "candidates: a\n"
     "spoiler-candidates:\n"
     "votes:\n"
     "a\n"},
    {"Plur.37", false,
     "system: plurality\n"
     "candidates: a b\n"
     "spoiler-candidates:\n"
     "k: 0\n"
     "votes:\n"
     "a>b\n"
     "b>a\n"},
    {"Plur.38", false,
     "system: plurality\n"
     "candidates: a b\n"
     "k: 0\n"
     "votes:\n"
     "a>b\n"
     "b>a\n"},
    {"Plur.39", false,
     "system: plurality\n"
     "candidates: a b\n"
     "k: 0\n"
     "votes:\n"
     "a>b\n"
     "b>a\n"
     "spoiler-votes:\n"},
    {"Plur.40", false,
     "system: plurality\n"
     "candidates: a b\n"
     "spoiler-candidates:\n"
     "votes:\n"
     "a>b\n"
     "b>a\n"},
    {"Plur.41", false,
     "system: plurality\n"
     "candidates: a b\n"
     "k: 1\n"
     "votes:\n"
     "b>a\n"
     "b>a\n"},
    {"Plur.42", false,
     "system: plurality\n"
     "candidates: a b\n"
     "k: 1\n"
     "votes:\n"
     "a>b\n"
     "a>b\n"
     "b>a\n"},
    {"Plur.43", false,
     "system: plurality\n"
     "candidates: a b\n"
     "k: 1\n"
     "votes:\n"
     "a>b\n"
     "b>a\n"},
    {"Plur.44", false,
     "system: plurality\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "b>c>a\n"
     "b>c>a\n"
     "c>b>a\n"
     "c>b>a\n"},
    {"Plur.45", false,
     "system: plurality\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "b>c>a\n"
     "c>b>a\n"},
    {"Plur.46", false,
     "system: plurality\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "b>c>a\n"
     "b>c>a\n"
     "b>c>a\n"
     "c>b>a\n"
     "c>b>a\n"
     "c>b>a\n"},
    {"Plur.47", true,
     "system: plurality\n"
     "candidates: a b c d\n"
     "votes:\n"
     "c>b>a>d\n"
     "d>c>a>b\n"
     "b>a>d>c\n"
     "c>b>d>a\n"
     "a>b>c>d\n"
     "d>b>c>a\n"
     "a>d>b>c\n"},
    {"Plur.48", true,
     "system: plurality\n"
     "candidates: a b c d e\n"
     "votes:\n"
     "a>c>b>d>e\n"
     "d>c>b>a>e\n"
     "c>d>b>e>a\n"
     "e>d>b>a>c\n"
     "a>d>b>e>c\n"
     "b>e>d>a>c\n"
     "a>d>e>b>c\n"
     "e>d>a>b>c\n"
     "c>a>e>d>b\n"
     "b>e>d>a>c\n"
     "d>c>e>b>a\n"},
    {"Plur.49", true,
     "system: plurality\n"
     "candidates: a b c d\n"
     "votes:\n"
     "c>a>b>d\n"
     "b>a>c>d\n"
     "c>b>a>d\n"
     "b>d>c>a\n"
     "d>a>b>c\n"
     "c>b>d>a\n"
     "a>d>b>c\n"
     "a>b>d>c\n"
     "c>d>a>b\n"},
    {"Plur.50", true,
     "system: plurality\n"
     "candidates: a b c d e\n"
     "votes:\n"
     "a>d>e>b>c\n"
     "e>c>b>a>d\n"
     "c>b>a>e>d\n"
     "e>a>d>b>c\n"
     "b>d>a>e>c\n"
     "e>a>b>d>c\n"
     "b>c>e>a>d\n"
     "d>c>b>a>e\n"
     "d>c>b>a>e\n"},
    {"Veto.1", false,
     "system: veto\n"
     "candidates: a b\n"
     "votes:\n"
     "a>b\n"
     "b>a\n"},
    {"Veto.2", false,
     "system: veto\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "a>b>c\n"},
    {"Veto.3", false,
     "system: veto\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "c>a>b\n"
     "c>b>a\n"
     "c>b>a\n"},
    {"Veto.4", false,
     "system: veto\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"},
    {"Veto.5", false,
     "system: veto\n"
     "candidates: a b\n"
     "votes:\n"
     "a>b\n"},
    {"Veto.6", false,
     "system: veto\n"
     "candidates: a b\n"
     "votes:\n"
     "b>a\n"},
    {"Veto.7", false,
     "system: veto\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "a>c>b\n"
     "b>c>a\n"
     "b>c>a\n"},
    {"Veto.8", false,
     "system: veto\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "a>b>c\n"
     "c>a>b\n"
     "c>b>a\n"
     "c>b>a\n"},
    {"Veto.9", false,
     "system: veto\n"
     "candidates: a b c d\n"
     "votes:\n"
     "a>b>c>d\n"
     "a>b>c>d\n"
     "b>d>c>a\n"},
    {"Veto.10", false,
     "system: veto\n"
     "candidates: a b c\n"
     "votes:\n"
     "b>c>a\n"
     "c>b>a\n"},
    {"Veto.11", false,
     "system: veto\n"
     "candidates: a b c\n"
     "votes:\n"
     "b>a>c\n"},
    {"Veto.12", false,
     "system: veto\n"
     "candidates: a b c d\n"
     "votes:\n"
     "a>b>c>d\n"
     "b>c>d>a\n"
     "c>a>d>b\n"},
    {"Veto.13", false,
     "system: veto\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "a>b>c\n"
     "a>b>c\n"
     "c>a>b\n"
     "c>a>b\n"
     "c>b>a\n"
     "c>b>a\n"},
    {"Veto.14", false,
     "system: veto\n"
     "candidates: a b c d\n"
     "votes:\n"
     "c>d>a>b\n"
     "c>d>a>b\n"
     "d>b>a>c\n"},
    {"Veto.15", false,
     "system: veto\n"
     "candidates: a b c d\n"
     "votes:\n"
     "a>b>c>d\n"
     "a>b>c>d\n"
     "b>c>a>d\n"
     "c>a>b>d\n"
     "c>d>b>a\n"},
    {"Veto.16", true,
     "system: veto\n"
     "candidates: a b c d\n"
     "votes:\n"
     "a>b>c>d\n"
     "b>a>c>d\n"
     "b>a>c>d\n"
     "b>a>c>d\n"
     "c>b>a>d\n"
     "d>c>a>b\n"
     "d>c>a>b\n"
     "d>c>a>b\n"
     "d>c>b>a\n"
     "d>c>b>a\n"},
    {"Veto.17", false,
     "system: veto\n"
     "candidates: a b c\n"
     "votes:\n"
     "b>a>c\n"
     "c>a>b\n"},
    {"Veto.18", false,
     "system: veto\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "a>b>c\n"
     "a>b>c\n"
     "a>c>b\n"
     "a>c>b\n"
     "a>c>b\n"
     "b>c>a\n"
     "b>c>a\n"},
    {"Veto.19", false,
     "system: veto\n"
     "candidates: a b c d\n"
     "votes:\n"
     "a>b>c>d\n"
     "b>d>a>c\n"
     "c>d>a>b\n"},
    {"Veto.20", false,
     "system: veto\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "c>a>b\n"},
    {"Veto.21", false,
     "system: veto\n"
     "candidates: a b\n"
     "spoiler-candidates: c\n"
     "k: 1\n"
     "votes:\n"
     "b>a>c\n"},
    {"Veto.22", false,
     "system: veto\n"
     "candidates: a b c\n"
     "spoiler-candidates: d\n"
     "k: 1\n"
     "votes:\n"
     "b>a>c>d\n"},
    {"Veto.23", false,
     "system: veto\n"
     "candidates: a b\n"
     "spoiler-candidates: c\n"
     "k: 1\n"
     "votes:\n"
     "a>b>c\n"},
    {"Veto.24", false,
     "system: veto\n"
     "candidates: a b\n"
     "spoiler-candidates: c\n"
     "k: 1\n"
     "votes:\n"
     "b>c>a\n"
     "c>b>a\n"},
    {"Veto.25", false,
     "system: veto\n"
     "candidates: a b c d\n"
     "k: 1\n"
     "votes:\n"
     "d>c>a>b\n"},
    {"Veto.26", false,
     "system: veto\n"
     "candidates: a b c\n"
     "k: 0\n"
     "votes:\n"
     "a>b>c\n"
     "a>b>c\n"
     "c>a>b\n"
     "c>b>a\n"
     "c>b>a\n"},
    {"Veto.27", false,
     "system: veto\n"
     "candidates: a b c\n"
     "k: 1\n"
     "votes:\n"
     "a>c>b\n"
     "a>c>b\n"},
    {"Veto.28", false,
     "system: veto\n"
     "candidates: a b c\n"
     "k: 1\n"
     "votes:\n"
     "c>a>b\n"
     "c>a>b\n"},
    {"Veto.29", false,
     "system: veto\n"
     "candidates: a b\n"
     "k: 1\n"
     "votes:\n"
     "a>b\n"},
    {"Veto.30", false,
     "system: veto\n"
     "candidates: a b c\n"
     "k: 1\n"
     "votes:\n"
     "c>b>a\n"
     "c>a>b\n"
     "b>a>c\n"},
    {"Veto.31", false,
     "system: veto\n"
     "candidates: a b c\n"
     "k: 1\n"
     "votes:\n"
     "a>c>b\n"
     "a>c>b\n"
     "a>c>b\n"
     "c>b>a\n"
     "c>b>a\n"},
    {"Veto.32", false,
     "system: veto\n"
     "candidates: a b c d\n"
     "k: 0\n"
     "votes:\n"
     "a>b>c>d\n"
     "a>b>c>d\n"
     "b>d>c>a\n"},
    {"Veto.33", false,
     "system: veto\n"
     "candidates: a b c\n"
     "k: 2\n"
     "votes:\n"
     "b>c>a\n"
     "b>c>a\n"
     "b>a>c\n"
     "b>a>c\n"
     "a>c>b\n"},
    {"Veto.34", false,
     "system: veto\n"
     "candidates: a b c\n"
     "k: 1\n"
     "votes:\n"
     "c>b>a\n"
     "c>b>a\n"
     "b>c>a\n"},
    {"Veto.35", false,
     "system: veto\n"
     "candidates: a b c\n"
     "k: 1\n"
     "votes:\n"
     "c>a>b\n"},
    {"Veto.36", false,
     "system: veto\n"
     "candidates: a b c\n"
     "k: 1\n"
     "votes:\n"
     "c>a>b\n"
     "spoiler-votes:\n"
     "c>a>b\n"},
    {"Veto.37", false,
     "system: veto\n"
     "candidates: a b\n"
     "k: 1\n"
     "votes:\n"
     "a>b\n"
     "spoiler-votes:\n"
     "a>b\n"},
    {"Veto.38", false,
     "system: veto\n"
     "candidates: a b\n"
     "k: 1\n"
     "votes:\n"
     "b>a\n"
     "spoiler-votes:\n"
     "b>a\n"},
    {"Veto.39", false,
     "system: veto\n"
     "candidates: a b c\n"
     "spoiler-candidates: d\n"
     "votes:\n"
     "d>c>a>b\n"},
    {"Veto.40", false,
     "system: veto\n"
     "candidates: a b\n"
     "spoiler-candidates: c\n"
     "votes:\n"
     "a>c>b\n"
     "a>b>c\n"},
    {"Veto.41", false,
     "system: veto\n"
     "candidates: a b\n"
     "spoiler-candidates: c\n"
     "votes:\n"
     "c>b>a\n"},
    {"Veto.42", false,
     "system: veto\n"
     "candidates: a b c\n"
     "votes:\n"
     "a>b>c\n"
     "a>c>b\n"},
    {"Veto.43", true,
     "system: veto\n"
     "candidates: a b c d\n"
     "votes:\n"
     "c>d>b>a\n"
     "a>b>c>d\n"
     "b>d>a>c\n"
     "b>d>c>a\n"
     "a>b>d>c\n"
     "a>b>d>c\n"},
    {"Veto.44", false,
     "system: veto\n"
     "candidates: a b c\n"
     "k: 0\n"
     "votes:\n"
     "a>b>c\n"
     "spoiler-votes:\n"},
    {"Veto.45", false,
     "system: veto\n"
     "candidates: a b\n"
     "k: 0\n"
     "votes:\n"
     "a>b\n"},
    {"Veto.46", false,
     "system: veto\n"
     "candidates: a b c d e\n"
     "k: 2\n"
     "votes:\n"
     "b>c>d>e>a\n"
     "b>c>d>e>a\n"
     "d>b>c>a>e\n"
     "e>b>c>a>d\n"
     "e>c>d>a>b\n"
     "e>b>d>a>c\n"},
    {"Appr.1", false,
     "system: approval\n"
     "candidates: a b\n"
     "votes:\n"
     "10\n"},
    {"Appr.2", false,
     "system: approval\n"
     "candidates: a b\n"
     "votes:\n"
     "10\n"
     "01\n"},
    {"Appr.3", false,
     "system: approval\n"
     "candidates: a b c\n"
     "votes:\n"
     "101\n"
     "110\n"},
    {"Appr.4", false,
     "system: approval\n"
     "candidates: a b c\n"
     "votes:\n"
     "110\n"
     "110\n"
     "010\n"
     "101\n"
     "101\n"
     "001\n"},
    {"Appr.5", false,
     "system: approval\n"
     "candidates: a b c\n"
     "votes:\n"
     "100\n"
     "011\n"
     "011\n"},
    {"Appr.6", false,
     "system: approval\n"
     "candidates: a b c\n"
     "votes:\n"
     "100\n"
     "110\n"
     "011\n"
     "011\n"},
    {"Appr.7", false,
     "system: approval\n"
     "candidates: a b c\n"
     "votes:\n"
     "100\n"
     "100\n"
     "100\n"
     "100\n"
     "100\n"
     "110\n"
     "010\n"
     "010\n"
     "010\n"
     "010\n"
     "001\n"
     "001\n"
     "001\n"
     "001\n"
     "001\n"
     "001\n"
     "001\n"},
    {"Appr.8", false,
     "system: approval\n"
     "candidates: a b c\n"
     "votes:\n"
     "100\n"
     "100\n"
     "100\n"
     "100\n"
     "010\n"
     "010\n"
     "010\n"
     "010\n"
     "010\n"
     "001\n"
     "001\n"
     "001\n"},
    {"Appr.9", false,
     "system: approval\n"
     "candidates: a b c d\n"
     "votes:\n"
     "1001\n"
     "1001\n"
     "1001\n"
     "1000\n"
     "0100\n"
     "0100\n"
     "0100\n"
     "0100\n"
     "0100\n"
     "0010\n"
     "0010\n"
     "0010\n"
     "0010\n"
     "0010\n"},
    {"Appr.10", false,
     "system: approval\n"
     "candidates: a b\n"
     "k: 0\n"
     "votes:\n"
     "10\n"},
    {"Appr.11", false,
     "system: approval\n"
     "candidates: a b\n"
     "spoiler-candidates: c\n"
     "k: 1\n"
     "votes:\n"
     "111\n"},
    {"Appr.12", false,
     "system: approval\n"
     "candidates: a b\n"
     "spoiler-candidates: c\n"
     "k: 1\n"
     "votes:\n"
     "010\n"},
    {"Appr.13", false,
     "system: approval\n"
     "candidates: a b\n"
     "spoiler-candidates: c\n"
     "k: 1\n"
     "votes:\n"
     "100\n"},
    {"Appr.14", false,
     "system: approval\n"
     "candidates: a b c\n"
     "k: 1\n"
     "votes:\n"
     "111\n"},
    {"Appr.15", false,
     "system: approval\n"
     "candidates: a b\n"
     "k: 1\n"
     "votes:\n"
     "11\n"},
    {"Appr.16", false,
     "system: approval\n"
     "candidates: a b c\n"
     "k: 1\n"
     "votes:\n"
     "011\n"},
    {"Appr.17", false,
     "system: approval\n"
     "candidates: a b c\n"
     "k: 1\n"
     "votes:\n"
     "011\n"
     "011\n"},
    {"Appr.18", false,
     "system: approval\n"
     "candidates: a b c\n"
     "k: 1\n"
     "votes:\n"
     "100\n"
     "111\n"},
    {"Appr.19", false,
     "system: approval\n"
     "candidates: a b c\n"
     "k: 1\n"
     "votes:\n"
     "100\n"
     "011\n"},
    {"Appr.20", false,
     "system: approval\n"
     "candidates: a b\n"
     "k: 1\n"
     "votes:\n"
     "10\n"
     "01\n"
     "01\n"
     "01\n"},
    {"Appr.21", false,
     "system: approval\n"
     "candidates: a b c d\n"
     "k: 2\n"
     "votes:\n"
     "1000\n"
     "0111\n"
     "0111\n"},
    {"Appr.22", false,
     "system: approval\n"
     "candidates: a b\n"
     "k: 2\n"
     "votes:\n"
     "10\n"
     "10\n"
     "01\n"},
    {"Appr.23", false,
     "system: approval\n"
     "candidates: a\n"
     "k: 1\n"
     "votes:\n"
     "1\n"},
    {"Appr.24", false,
     "system: approval\n"
     "candidates: a b\n"
     "k: 1\n"
     "votes:\n"
     "01\n"
     "spoiler-votes:\n"
     "10\n"},
    {"Appr.25", false,
     "system: approval\n"
     "candidates: a b\n"
     "k: 1\n"
     "votes:\n"
     "10\n"
     "spoiler-votes:\n"
     "10\n"},
    {"Appr.26", false,
     "system: approval\n"
     "candidates: a b\n"
     "k: 1\n"
     "votes:\n"
     "01\n"
     "spoiler-votes:\n"
     "01\n"},
    {"Appr.27", false,
     "system: approval\n"
     "candidates: a b\n"
     "k: 0\n"
     "votes:\n"
     "10\n"
     "01\n"
     "spoiler-votes:\n"},
    {"Appr.28", false,
     "system: approval\n"
     "candidates: a b\n"
     "spoiler-candidates: c\n"
     "votes:\n"
     "100\n"},
    {"Appr.29", false,
     "system: approval\n"
     "candidates: a b c\n"
     "k: 0\n"
     "votes:\n"
     "101\n"
     "110\n"},
    {"Appr.30", false,
     "system: approval\n"
     "candidates: a b\n"
     "spoiler-candidates:\n"
     "votes:\n"
     "10\n"
     "01\n"},
    {"Appr.31", false,
     "system: approval\n"
     "candidates: a b c d e f g h\n"
     "votes:\n"
     "10111100\n"
     "10111100\n"
     "11100000\n"
     "01000001\n"
     "01000001\n"
     "00010001\n"
     "00001011\n"
     "00000111\n"
     "10111110\n"
     "11011110\n"},
    {"Appr.32", false,
     "system: approval\n"
     "candidates: a b c d e f g h i j\n"
     "votes:\n"
     "1110111100\n"
     "1110111100\n"
     "1110111100\n"
     "1111000001\n"
     "0001000001\n"
     "0001000001\n"
     "0001000001\n"
     "0000100001\n"
     "0000010011\n"
     "0000001011\n"
     "0000000111\n"
     "1011111110\n"
     "1101111110\n"
     "1110111110\n"},
};

const int kWitnessLibrarySize = 128;

}  // namespace ectk::detail
