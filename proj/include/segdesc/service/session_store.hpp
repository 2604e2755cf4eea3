#pragma once

#include "segdesc/analysis/analyzer.hpp"
#include "segdesc/io/problem_document.hpp"
#include "segdesc/io/report.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace segdesc::service {

/// One accepted edit: comparisons removed (by id), then comparisons added.
struct Edit {
  std::vector<std::string> remove;
  std::vector<uta::Comparison> add;

  bool empty() const { return remove.empty() && add.empty(); }
};

class EditRejected : public std::runtime_error {
public:
  EditRejected(std::string location, const std::string& message)
      : std::runtime_error(message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

private:
  std::string location_;
};

struct StoredAnalysis {
  std::uint64_t revision = 0;
  io::AnalysisRequest request;
  std::string body;
};

/// Edits take the writer lock; analyses share the reader lock, so queries
/// within one revision run concurrently.
class Session {
public:
  Session(std::string id, io::ProblemDocument document);

  const std::string& id() const { return id_; }

  /// Current document and revision, read together.
  std::pair<io::ProblemDocument, std::uint64_t> current() const;

  /// Applies the edit atomically. Empty edits leave the revision alone;
  /// rejected edits change nothing. Returns the resulting revision.
  std::uint64_t apply(const Edit& edit);

  /// Analyzer for the current revision, built on first use and shared by
  /// every request of that revision.
  std::pair<std::shared_ptr<const analysis::Analyzer>, std::uint64_t> analyzer() const;

  /// Keeps a rendered analysis; returns its index.
  std::size_t record(StoredAnalysis analysis);
  std::optional<StoredAnalysis> stored(std::size_t index) const;
  std::size_t stored_count() const;

  const io::ProblemDocument& initial() const { return initial_; }
  std::vector<Edit> log() const;

private:
  mutable std::shared_mutex mutex_;
  std::string id_;
  io::ProblemDocument initial_;
  io::ProblemDocument document_;
  std::uint64_t revision_ = 0;
  std::vector<Edit> log_;

  mutable std::mutex cache_mutex_;
  mutable std::shared_ptr<const analysis::Analyzer> cached_;
  mutable std::uint64_t cached_revision_ = 0;

  mutable std::mutex analyses_mutex_;
  std::vector<StoredAnalysis> analyses_;
};

class SessionStore {
public:
  std::shared_ptr<Session> create(io::ProblemDocument document);
  std::shared_ptr<Session> find(const std::string& id) const;
  std::size_t size() const;

  /// {"sessions": [{"id", "document", "log": [{"remove", "add"}]}]}
  io::Json snapshot() const;
  /// Replays each session's log on top of its initial document.
  void restore(const io::Json& snapshot);

private:
  std::string fresh_id();

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t counter_ = 0;
};

io::Json edit_json(const Edit& edit);
Edit parse_edit(const io::Json& body);

} // namespace segdesc::service
