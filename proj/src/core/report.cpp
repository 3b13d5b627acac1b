#include "hopfcyc/report.hpp"

namespace hopfcyc {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skip: return "skip";
    }
    return "?";
}

void Report::pass(std::string name, std::string detail) {
    checks_.push_back({std::move(name), Status::Pass, std::move(detail)});
}

void Report::fail(std::string name, std::string detail) {
    checks_.push_back({std::move(name), Status::Fail, std::move(detail)});
}

void Report::skip(std::string name, std::string detail) {
    checks_.push_back({std::move(name), Status::Skip, std::move(detail)});
}

void Report::check(std::string name, bool ok, std::string detail_on_failure) {
    if (ok)
        pass(std::move(name));
    else
        fail(std::move(name), std::move(detail_on_failure));
}

void Report::table(std::string name, std::vector<std::int64_t> values) {
    tables_.emplace_back(std::move(name), std::move(values));
}

void Report::merge(const Report& other, const std::string& prefix) {
    std::string p = prefix.empty() ? std::string() : prefix + ": ";
    for (const auto& c : other.checks_) checks_.push_back({p + c.name, c.status, c.detail});
    for (const auto& [n, v] : other.tables_) tables_.emplace_back(p + n, v);
}

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& c : checks_)
        if (c.status == Status::Fail) ++n;
    return n;
}

const Check* Report::first_failure() const {
    for (const auto& c : checks_)
        if (c.status == Status::Fail) return &c;
    return nullptr;
}

}  // namespace hopfcyc
