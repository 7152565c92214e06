#include "vrmenu/service/document_store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include "vrmenu/error.hpp"
#include "vrmenu/io/document_format.hpp"

namespace vrmenu::service {

namespace {

void write_file_durably(const std::filesystem::path& path, const std::string& text) {
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  if (fd < 0) {
    throw std::system_error(errno, std::generic_category(), "open " + path.string());
  }
  std::size_t written = 0;
  while (written < text.size()) {
    const ssize_t n = ::write(fd, text.data() + written, text.size() - written);
    if (n < 0) {
      if (errno == EINTR) {
        continue;
      }
      const int err = errno;
      ::close(fd);
      throw std::system_error(err, std::generic_category(), "write " + path.string());
    }
    written += static_cast<std::size_t>(n);
  }
  ::fsync(fd);
  ::close(fd);
}

std::vector<std::string> differing_ids(const core::MenuDocument& before, const core::MenuDocument& after) {
  std::set<std::string> ids;
  for (const auto& [id, menu] : before.menus) {
    const core::MenuNode* other = after.find_menu(id);
    if (other == nullptr || !(*other == menu)) {
      ids.insert(id);
    }
  }
  for (const auto& [id, menu] : after.menus) {
    if (before.find_menu(id) == nullptr) {
      ids.insert(id);
    }
  }
  for (const auto& [id, button] : before.buttons) {
    const core::ButtonNode* other = after.find_button(id);
    if (other == nullptr || !(*other == button)) {
      ids.insert(id);
    }
  }
  for (const auto& [id, button] : after.buttons) {
    if (before.find_button(id) == nullptr) {
      ids.insert(id);
    }
  }
  return {ids.begin(), ids.end()};
}

void check_revision(const core::MenuDocument& doc, std::optional<std::uint64_t> expected) {
  if (expected && *expected != doc.revision) {
    throw Error(ErrorCode::kRevisionConflict, "revision mismatch: document is at " + std::to_string(doc.revision) +
                                                  ", request expected " + std::to_string(*expected));
  }
}

}  // namespace

DocumentStore::DocumentStore(std::filesystem::path data_dir) : data_dir_(std::move(data_dir)) {
  std::filesystem::create_directories(data_dir_);
  for (const auto& file : std::filesystem::directory_iterator(data_dir_)) {
    if (!file.is_regular_file() || file.path().extension() != ".json") {
      continue;
    }
    const std::string doc_id = file.path().stem().string();
    if (!valid_document_id(doc_id)) {
      continue;
    }
    std::ifstream in(file.path(), std::ios::binary);
    std::stringstream text;
    text << in.rdbuf();
    auto entry = std::make_shared<Entry>();
    entry->doc = io::parse_document(text.str());
    entries_.emplace(doc_id, std::move(entry));
  }
}

DocumentStore::~DocumentStore() { shutdown(); }

bool DocumentStore::valid_document_id(std::string_view id) {
  if (id.empty() || id.size() > 128) {
    return false;
  }
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
  });
}

std::shared_ptr<DocumentStore::Entry> DocumentStore::find(const std::string& doc_id) const {
  std::lock_guard lock(entries_mutex_);
  auto it = entries_.find(doc_id);
  if (it == entries_.end()) {
    throw Error(ErrorCode::kUnknownId, "unknown document '" + doc_id + "'");
  }
  return it->second;
}

std::shared_ptr<DocumentStore::Entry> DocumentStore::find_or_create(const std::string& doc_id, bool& created) {
  if (!valid_document_id(doc_id)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid document id '" + doc_id + "'");
  }
  std::lock_guard lock(entries_mutex_);
  auto [it, inserted] = entries_.try_emplace(doc_id, nullptr);
  if (inserted) {
    it->second = std::make_shared<Entry>();
  }
  created = inserted;
  return it->second;
}

bool DocumentStore::contains(const std::string& doc_id) const {
  std::lock_guard lock(entries_mutex_);
  return entries_.contains(doc_id);
}

core::MenuDocument DocumentStore::get(const std::string& doc_id) const {
  auto entry = find(doc_id);
  std::lock_guard lock(entry->state_mutex);
  return entry->doc;
}

void DocumentStore::persist(const std::string& doc_id, const core::MenuDocument& doc) const {
  const auto target = data_dir_ / (doc_id + ".json");
  const auto temp = data_dir_ / (doc_id + ".json.tmp");
  write_file_durably(temp, io::serialize_document(doc));
  std::filesystem::rename(temp, target);
}

void DocumentStore::publish(Entry& entry, core::MenuDocument doc, std::vector<std::string> changed_ids) {
  {
    std::lock_guard lock(entry.state_mutex);
    const std::uint64_t revision = doc.revision;
    entry.doc = std::move(doc);
    entry.events.push_back({revision, std::move(changed_ids)});
  }
  entry.changed.notify_all();
}

editor::EditOutcome DocumentStore::mutate(const std::string& doc_id, std::optional<std::uint64_t> expected_revision,
                                          const Operation& op) {
  auto entry = find(doc_id);
  std::lock_guard write_lock(entry->write_mutex);
  core::MenuDocument current;
  {
    std::lock_guard lock(entry->state_mutex);
    current = entry->doc;
  }
  check_revision(current, expected_revision);
  editor::EditOutcome outcome = op(current);
  persist(doc_id, outcome.document);
  std::vector<std::string> changed = outcome.changed_ids;
  std::sort(changed.begin(), changed.end());
  changed.erase(std::unique(changed.begin(), changed.end()), changed.end());
  publish(*entry, outcome.document, std::move(changed));
  return outcome;
}

core::MenuDocument DocumentStore::replace(const std::string& doc_id, std::optional<std::uint64_t> expected_revision,
                                          core::MenuDocument doc) {
  bool created = false;
  auto entry = find_or_create(doc_id, created);
  std::lock_guard write_lock(entry->write_mutex);
  core::MenuDocument current;
  {
    std::lock_guard lock(entry->state_mutex);
    current = entry->doc;
  }
  if (!created) {
    check_revision(current, expected_revision);
    doc.revision = current.revision + 1;
  }
  try {
    persist(doc_id, doc);
  } catch (...) {
    if (created) {
      std::lock_guard lock(entries_mutex_);
      entries_.erase(doc_id);
    }
    throw;
  }
  publish(*entry, doc, differing_ids(created ? core::MenuDocument{} : current, doc));
  return doc;
}

std::vector<ChangeEvent> DocumentStore::wait_events(const std::string& doc_id, std::uint64_t after_revision,
                                                    std::chrono::milliseconds timeout) const {
  auto entry = find(doc_id);
  std::unique_lock lock(entry->state_mutex);
  auto pending = [&] {
    return is_shut_down() ||
           std::any_of(entry->events.begin(), entry->events.end(),
                       [&](const ChangeEvent& e) { return e.revision > after_revision; });
  };
  entry->changed.wait_for(lock, timeout, pending);
  std::vector<ChangeEvent> out;
  for (const auto& e : entry->events) {
    if (e.revision > after_revision) {
      out.push_back(e);
    }
  }
  return out;
}

void DocumentStore::shutdown() {
  {
    std::lock_guard lock(shutdown_mutex_);
    shut_down_ = true;
  }
  std::lock_guard lock(entries_mutex_);
  for (auto& [id, entry] : entries_) {
    { std::lock_guard state(entry->state_mutex); }
    entry->changed.notify_all();
  }
}

bool DocumentStore::is_shut_down() const {
  std::lock_guard lock(shutdown_mutex_);
  return shut_down_;
}

}  // namespace vrmenu::service
