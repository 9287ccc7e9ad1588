#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "csa/errors.hpp"

namespace csa {

enum class Side { kClient, kServer };
enum class CostCategory { kInexpensive, kMedium, kExpensive };

std::string_view side_name(Side s);
std::string_view category_name(CostCategory c);

// Numeric weights are an instrument for making the qualitative asymmetry
// assertable; the report shows categories alongside totals.
struct CostWeights {
  std::uint32_t inexpensive = 1;
  std::uint32_t medium = 10;
  std::uint32_t expensive = 100;

  void validate() const;  // weights must be strictly increasing
  std::uint32_t weight(CostCategory c) const;
};

struct CostEvent {
  Side side;
  std::string label;
  CostCategory category;
  std::uint64_t t_ms = 0;
};

// True when (side, label, category) is one of the fixed cost-table
// operations. Servers never solve, clients never issue challenges.
bool cost_label_allowed(Side side, std::string_view label, CostCategory category);

// Per-run cost accounting over the fixed operation vocabulary.
class CostLedger {
 public:
  explicit CostLedger(CostWeights weights = {});

  // Throws ParameterError when the label/side/category triple is not in
  // the vocabulary (catches mis-instrumented code).
  void record(Side side, std::string_view label, CostCategory category,
              std::uint64_t t_ms = 0);

  struct Comparison {
    std::uint64_t client_total = 0;
    std::uint64_t server_total = 0;
    bool asymmetry_holds = false;  // client_total > server_total
  };
  Comparison compare() const;  // throws EmptyError on an empty ledger

  // Two-column operation/category table plus weighted totals.
  std::string render_report() const;
  // Machine-readable: side,operation,category,weight,count
  std::string render_csv() const;

  const std::vector<CostEvent>& events() const { return events_; }
  const CostWeights& weights() const { return weights_; }
  std::uint64_t total(Side side) const;
  std::size_t count(Side side, std::string_view label) const;
  bool has_category(Side side, CostCategory category) const;
  bool empty() const { return events_.empty(); }
  void clear();

 private:
  CostWeights weights_;
  std::vector<CostEvent> events_;
  std::uint64_t totals_[2] = {0, 0};
};

// Ledger labels (the cost-table vocabulary).
namespace cost_op {
inline constexpr std::string_view kSendInitialRequest = "send_initial_request";
inline constexpr std::string_view kSolvePuzzle = "solve_puzzle";
inline constexpr std::string_view kDecryptSessionKey = "decrypt_session_key";
inline constexpr std::string_view kReplyChallenge = "reply_challenge";
inline constexpr std::string_view kHashPuzzleElement = "hash_puzzle_element";
inline constexpr std::string_view kVerifyElements = "verify_elements";
inline constexpr std::string_view kDecryptUetIssueSessionKey =
    "decrypt_uet_issue_session_key";
}  // namespace cost_op

}  // namespace csa
