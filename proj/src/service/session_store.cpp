#include "segdesc/service/session_store.hpp"

#include <random>
#include <set>

namespace segdesc::service {

namespace {

std::string at(const char* field, std::size_t i) { return std::string(field) + "[" + std::to_string(i) + "]"; }

io::ProblemDocument edited(io::ProblemDocument doc, const Edit& edit) {
  auto& comparisons = doc.problem.comparisons;
  for (std::size_t i = 0; i < edit.remove.size(); ++i) {
    if (!comparisons.remove(edit.remove[i]))
      throw EditRejected(at("remove", i), "no comparison " + edit.remove[i] + " to remove");
  }
  for (std::size_t i = 0; i < edit.add.size(); ++i) {
    const auto& c = edit.add[i];
    try {
      uta::ReferenceComparisons({c}).validate(doc.problem.table);
    } catch (const uta::ComparisonError& e) {
      throw EditRejected(at("add", i), e.what());
    }
    if (comparisons.find(c.id()) != std::string::npos)
      throw EditRejected(at("add", i), "comparison " + c.id() + " is already present");
    comparisons.add(c);
  }
  return doc;
}

} // namespace

Session::Session(std::string id, io::ProblemDocument document)
    : id_(std::move(id)), initial_(document), document_(std::move(document)) {}

std::pair<io::ProblemDocument, std::uint64_t> Session::current() const {
  std::shared_lock lock(mutex_);
  return {document_, revision_};
}

std::uint64_t Session::apply(const Edit& edit) {
  std::unique_lock lock(mutex_);
  if (edit.empty()) return revision_;
  document_ = edited(document_, edit);
  log_.push_back(edit);
  return ++revision_;
}

std::pair<std::shared_ptr<const analysis::Analyzer>, std::uint64_t> Session::analyzer() const {
  std::shared_lock lock(mutex_);
  std::lock_guard cache(cache_mutex_);
  if (!cached_ || cached_revision_ != revision_) {
    cached_ = std::make_shared<const analysis::Analyzer>(document_.problem, io::options_for(document_));
    cached_revision_ = revision_;
  }
  return {cached_, cached_revision_};
}

std::size_t Session::record(StoredAnalysis analysis) {
  std::lock_guard lock(analyses_mutex_);
  analyses_.push_back(std::move(analysis));
  return analyses_.size() - 1;
}

std::optional<StoredAnalysis> Session::stored(std::size_t index) const {
  std::lock_guard lock(analyses_mutex_);
  if (index >= analyses_.size()) return std::nullopt;
  return analyses_[index];
}

std::size_t Session::stored_count() const {
  std::lock_guard lock(analyses_mutex_);
  return analyses_.size();
}

std::vector<Edit> Session::log() const {
  std::shared_lock lock(mutex_);
  return log_;
}

std::string SessionStore::fresh_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  char buffer[17];
  std::string id;
  do {
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(rng()));
    id = "s" + std::to_string(++counter_) + "-" + buffer;
  } while (sessions_.count(id) != 0);
  return id;
}

std::shared_ptr<Session> SessionStore::create(io::ProblemDocument document) {
  io::validate_comparisons(document, "comparisons");
  std::lock_guard lock(mutex_);
  auto session = std::make_shared<Session>(fresh_id(), std::move(document));
  sessions_.emplace(session->id(), session);
  return session;
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) const {
  std::lock_guard lock(mutex_);
  const auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

io::Json SessionStore::snapshot() const {
  std::vector<std::shared_ptr<Session>> sessions;
  {
    std::lock_guard lock(mutex_);
    for (const auto& [id, s] : sessions_) sessions.push_back(s);
  }
  io::Json list = io::Json::array();
  for (const auto& s : sessions) {
    io::Json log = io::Json::array();
    for (const auto& e : s->log()) log.push_back(edit_json(e));
    list.push_back(io::Json{{"id", s->id()}, {"document", io::problem_to_json(s->initial())}, {"log", std::move(log)}});
  }
  return io::Json{{"sessions", std::move(list)}};
}

void SessionStore::restore(const io::Json& snapshot) {
  std::map<std::string, std::shared_ptr<Session>> restored;
  const auto& list = snapshot.at("sessions");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& entry = list[i];
    const auto id = entry.at("id").get<std::string>();
    auto session = std::make_shared<Session>(id, io::parse_problem_json(entry.at("document").dump()));
    for (const auto& e : entry.at("log")) session->apply(parse_edit(e));
    restored.emplace(id, std::move(session));
  }
  std::lock_guard lock(mutex_);
  for (auto& [id, s] : restored) sessions_[id] = std::move(s);
  counter_ += restored.size();
}

io::Json edit_json(const Edit& edit) {
  io::Json add = io::Json::array();
  for (const auto& c : edit.add) add.push_back(c.id());
  return io::Json{{"remove", edit.remove}, {"add", std::move(add)}};
}

Edit parse_edit(const io::Json& body) {
  if (!body.is_object()) throw io::ParseError("", "edit must be a JSON object");
  Edit edit;
  auto strings = [&](const char* field) {
    std::vector<std::string> out;
    if (!body.contains(field)) return out;
    const auto& list = body[field];
    if (!list.is_array()) throw io::ParseError(field, "expected an array of comparisons");
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!list[i].is_string()) throw io::ParseError(at(field, i), "expected a comparison such as \"a8>a14\"");
      out.push_back(list[i].get<std::string>());
    }
    return out;
  };
  for (const auto& key : body.items())
    if (key.key() != "add" && key.key() != "remove") throw io::ParseError(key.key(), "unknown field");
  edit.remove = strings("remove");
  const auto added = strings("add");
  for (std::size_t i = 0; i < added.size(); ++i) {
    try {
      edit.add.push_back(uta::parse_comparison(added[i]));
    } catch (const uta::ComparisonError& e) {
      throw io::ParseError(at("add", i), e.what());
    }
  }
  return edit;
}

} // namespace segdesc::service
