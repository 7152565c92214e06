#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "vrmenu/core/model.hpp"
#include "vrmenu/editor/editor.hpp"

namespace vrmenu::service {

struct ChangeEvent {
  std::uint64_t revision = 0;
  std::vector<std::string> changed_ids;
};

// Documents keyed by id, each persisted as <data_dir>/<id>.json. Mutations of
// one document run one at a time; reads never wait for a mutation's disk
// write. The file on disk is replaced by write-then-rename after every
// commit, so a restart sees the last committed revision.
class DocumentStore {
 public:
  explicit DocumentStore(std::filesystem::path data_dir);
  ~DocumentStore();

  DocumentStore(const DocumentStore&) = delete;
  DocumentStore& operator=(const DocumentStore&) = delete;

  static bool valid_document_id(std::string_view id);

  // Throws Error{kUnknownId} for unknown documents.
  core::MenuDocument get(const std::string& doc_id) const;
  bool contains(const std::string& doc_id) const;

  using Operation = std::function<editor::EditOutcome(const core::MenuDocument&)>;

  // Runs `op` on the current document and commits its result. When
  // `expected_revision` is set and differs from the stored revision, throws
  // Error{kRevisionConflict} without running `op`.
  editor::EditOutcome mutate(const std::string& doc_id, std::optional<std::uint64_t> expected_revision,
                             const Operation& op);

  // Wholesale replacement; creates the document if it does not exist. An
  // existing document's revision advances by one.
  core::MenuDocument replace(const std::string& doc_id, std::optional<std::uint64_t> expected_revision,
                             core::MenuDocument doc);

  // Events with revision > after_revision. Blocks up to `timeout` when none
  // are available yet. Returns empty on timeout or shutdown.
  std::vector<ChangeEvent> wait_events(const std::string& doc_id, std::uint64_t after_revision,
                                       std::chrono::milliseconds timeout) const;

  // Wakes every waiter; later waits return immediately.
  void shutdown();
  bool is_shut_down() const;

 private:
  struct Entry {
    std::mutex write_mutex;            // serializes mutations
    mutable std::mutex state_mutex;    // guards doc and events
    mutable std::condition_variable changed;
    core::MenuDocument doc;
    std::vector<ChangeEvent> events;
  };

  std::shared_ptr<Entry> find(const std::string& doc_id) const;
  std::shared_ptr<Entry> find_or_create(const std::string& doc_id, bool& created);
  void persist(const std::string& doc_id, const core::MenuDocument& doc) const;
  void publish(Entry& entry, core::MenuDocument doc, std::vector<std::string> changed_ids);

  std::filesystem::path data_dir_;
  mutable std::mutex entries_mutex_;
  std::map<std::string, std::shared_ptr<Entry>> entries_;
  mutable std::mutex shutdown_mutex_;
  bool shut_down_ = false;
};

}  // namespace vrmenu::service
