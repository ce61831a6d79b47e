#ifndef MPAE_LOG_HPP
#define MPAE_LOG_HPP

#include "mpae/individual.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

namespace mpae {

// One evaluated individual, as logged. Serialized as
//   I <gen> <layer> <id> <origin> <genome-hex> <obj0,obj1,...>
// tab separated, objectives in shortest round-trip decimal form.
struct LogRecord {
    uint32_t generation = 0;
    uint32_t layer = 0;
    uint64_t id = 0;
    Origin origin = Origin::Initial;
    std::string genome_hex;
    ObjectiveVector objectives;

    std::string to_line() const;
};

LogRecord parse_record_line(const std::string& line);

// Append-only run log. Lines accumulate into a running FNV-1a hash (header
// included), so two logs are byte identical iff their hashes and line
// counts agree. Optionally mirrored to a file.
class EventLog {
public:
    static constexpr const char* kHeaderLine = "# mpae-log v1";

    EventLog();

    void attach_file(const std::filesystem::path& path); // truncates, writes header
    void append(const LogRecord& record);
    void append_event(const std::string& kind, const std::string& payload);
    void flush();

    uint64_t hash() const { return hash_; }
    uint64_t line_count() const { return line_count_; }

    void set_keep_in_memory(bool keep) { keep_in_memory_ = keep; }
    const std::vector<std::string>& lines() const { return lines_; }

    // Checkpoint resume: adopt the counters of a previous run segment.
    void restore_counters(uint64_t hash, uint64_t line_count);

private:
    void append_line(const std::string& line);

    uint64_t hash_;
    uint64_t line_count_ = 0;
    bool keep_in_memory_ = true;
    std::vector<std::string> lines_;
    std::unique_ptr<std::ofstream> file_;
};

// All individual records of a log file; event lines are skipped.
std::vector<LogRecord> read_log_records(const std::filesystem::path& path);

} // namespace mpae

#endif
