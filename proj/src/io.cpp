namespace g1 {
}
