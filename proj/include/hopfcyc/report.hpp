#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hopfcyc {

enum class Status { Pass, Fail, Skip };

std::string to_string(Status s);

struct Check {
    std::string name;
    Status status = Status::Pass;
    std::string detail;
};

// Outcome of a batch of checks plus named integer tables (dimension lists etc).
class Report {
public:
    Report() = default;
    explicit Report(std::string title) : title_(std::move(title)) {}

    const std::string& title() const { return title_; }
    const std::vector<Check>& checks() const { return checks_; }
    const std::vector<std::pair<std::string, std::vector<std::int64_t>>>& tables() const { return tables_; }

    void pass(std::string name, std::string detail = {});
    void fail(std::string name, std::string detail);
    void skip(std::string name, std::string detail);
    void check(std::string name, bool ok, std::string detail_on_failure = {});
    void table(std::string name, std::vector<std::int64_t> values);
    // Appends the checks and tables of another report, prefixing their names.
    void merge(const Report& other, const std::string& prefix = {});

    bool ok() const;
    std::size_t failures() const;
    const Check* first_failure() const;

private:
    std::string title_;
    std::vector<Check> checks_;
    std::vector<std::pair<std::string, std::vector<std::int64_t>>> tables_;
};

}  // namespace hopfcyc
