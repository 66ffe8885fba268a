// Copyright (c) 2026 the dnsexfil authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dnsexfil {

/// One normalized subdomain: lowercase, characters in {a-z, 0-9, '-', '_', '.'},
/// no leading/trailing dot, no empty label. `count` is the observed frequency.
struct SubdomainRecord {
    std::string text;
    std::optional<int> label;  // 0 benign, 1 malicious
    std::uint64_t count = 1;

    bool operator==(const SubdomainRecord&) const = default;
};

struct SplitSet {
    std::vector<SubdomainRecord> train;       // duplicates retained via counts
    std::vector<SubdomainRecord> validation;  // string-unique
    std::vector<SubdomainRecord> test;        // string-unique
    std::uint64_t seed = 0;
};

struct DuplicateStats {
    std::uint64_t raw_rows = 0;
    std::uint64_t unique_groups = 0;
    double inflation_ratio = 0.0;   // raw_rows / unique_groups
    double duplicate_share = 0.0;   // (raw_rows - unique_groups) / raw_rows
    std::uint64_t p50 = 0, p90 = 0, p99 = 0, max = 0;  // group sizes, nearest-rank
};

/// Counters shared across per-file ingestion workers.
struct IngestStats {
    std::atomic<std::uint64_t> rows_read{0};
    std::atomic<std::uint64_t> rows_rejected{0};
    std::atomic<std::uint64_t> label_conflicts{0};

    void reset() {
        rows_read = 0;
        rows_rejected = 0;
        label_conflicts = 0;
    }
};

/// Public-suffix rules: plain text, one suffix per line, '#' comments.
class SuffixRules {
public:
    static SuffixRules from_file(const std::filesystem::path& path);
    static SuffixRules from_lines(const std::vector<std::string>& lines);

    /// Number of trailing labels of `fqdn_labels` matching the longest rule,
    /// or 0 if none matches.
    std::size_t longest_match(const std::vector<std::string_view>& labels) const;

    bool empty() const { return suffixes_.empty(); }
    std::size_t size() const { return suffixes_.size(); }

private:
    // suffix -> label count, e.g. "co.uk" -> 2
    std::map<std::string, std::size_t, std::less<>> suffixes_;
};

bool is_valid_subdomain_text(std::string_view text);

/// Lowercase `raw_fqdn`, validate its character set, and extract the subdomain
/// left of the registrable domain. With rules: strip the longest matching
/// public suffix plus one registrable label; a name matching no rule is taken
/// to be an already-extracted subdomain and is returned as-is. Without rules:
/// strip the last two labels. Rows that fail validation, or whose subdomain
/// comes out empty, yield nullopt.
std::optional<SubdomainRecord> normalize_record(std::string_view raw_fqdn,
                                                const SuffixRules* rules = nullptr);

struct DedupResult {
    std::vector<SubdomainRecord> records;  // each distinct text once, counts summed
    DuplicateStats stats;
    std::uint64_t label_conflicts = 0;  // groups with disagreeing labels (resolved to 1)
};

DedupResult dedup(const std::vector<SubdomainRecord>& records);

struct SplitRatios {
    double train = 0.8;
    double validation = 0.1;
    double test = 0.1;
};

/// Partition unique texts into train/validation/test. Assignment ranks texts
/// by hash(text, seed), so it is deterministic, stable under input reordering,
/// and cuts at round(n * ratio) boundaries. Train keeps summed counts;
/// validation/test carry one instance per text (count forced to 1).
SplitSet split_corpus(const std::vector<SubdomainRecord>& records, SplitRatios ratios,
                      std::uint64_t seed);

/// Per-label sampling without replacement over count-expanded instances;
/// keeps round(fraction * class_instances) of each class. Requires labels on
/// every record and fraction in (0, 1].
std::vector<SubdomainRecord> stratified_subsample(const std::vector<SubdomainRecord>& train,
                                                  double fraction, std::uint64_t seed);

/// Corpus rows: `text<TAB>label(0|1, optional)<TAB>count(optional)`.
/// Lines starting with '#' are skipped. Invalid rows are counted, not fatal.
std::vector<SubdomainRecord> read_corpus_tsv(const std::filesystem::path& path,
                                             IngestStats* stats = nullptr);
void write_corpus_tsv(const std::filesystem::path& path,
                      const std::vector<SubdomainRecord>& records);

std::uint64_t total_instances(const std::vector<SubdomainRecord>& records);

}  // namespace dnsexfil
