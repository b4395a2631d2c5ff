#pragma once

// Raw storage for the built-in witness library (see corpus_data.cpp).

namespace ectk::detail {

struct RawRecord {
    const char* id;
    bool computer_generated;
    const char* text;  // canonical election file format
};

extern const RawRecord kWitnessLibrary[];
extern const int kWitnessLibrarySize;

}  // namespace ectk::detail
